#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsgap/error.hpp"
#include "rsgap/poly.hpp"

#include <random>

using namespace rsgap;

namespace {

FieldCtx tiny_ctx() { return FieldCtx(BigInt(17), 8, BigInt(2), 2); }

// NTT-friendly 64-bit prime with 2^32 | p-1
FieldCtx desk_scale_ctx(std::mt19937_64& rng) {
    const BigInt p("18446744069414584321");
    return FieldCtx::create(p, 64, 4, rng);
}

DensePoly random_poly(const FieldCtx& ctx, std::mt19937_64& rng, size_t max_size) {
    std::vector<BigInt> c(rng() % (max_size + 1));
    for (auto& x : c) x = rand_below(rng, ctx.p());
    return poly_trim(std::move(c));
}

DensePoly schoolbook(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs[i], b.coeffs[j]));
    return poly_trim(std::move(out));
}

}  // namespace

TEST_CASE("poly_mul hand cases, p = 17") {
    const FieldCtx ctx = tiny_ctx();
    // (X-1)(X+1) = X^2 - 1
    const DensePoly a{{BigInt(16), BigInt(1)}};
    const DensePoly b{{BigInt(1), BigInt(1)}};
    const DensePoly ab = poly_mul(ctx, a, b);
    CHECK(ab.coeffs == std::vector<BigInt>{BigInt(16), BigInt(0), BigInt(1)});
    // (X^2-1)(X^2-4) = X^4 - 5X^2 + 4
    const DensePoly c{{BigInt(16), BigInt(0), BigInt(1)}};
    const DensePoly d{{BigInt(13), BigInt(0), BigInt(1)}};
    const DensePoly cd = poly_mul(ctx, c, d);
    CHECK(cd.coeffs ==
          std::vector<BigInt>{BigInt(4), BigInt(0), BigInt(12), BigInt(0), BigInt(1)});
    CHECK(poly_mul(ctx, a, DensePoly{}).is_zero());
}

TEST_CASE("NTT evaluation matches powers, p=17 n=8 omega=2") {
    const FieldCtx ctx = tiny_ctx();
    const DensePoly x{{BigInt(0), BigInt(1)}};  // f = X
    const EvalTable t = ntt_evaluate(ctx, x);
    CHECK(t.values == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(4), BigInt(8), BigInt(16),
                                          BigInt(15), BigInt(13), BigInt(9)});
    const DensePoly c{{BigInt(5)}};  // constant
    for (const auto& v : ntt_evaluate(ctx, c).values) CHECK(v == 5);
    CHECK_THROWS_AS((void)ntt_evaluate(ctx, DensePoly{std::vector<BigInt>(9, BigInt(1))}), Error);
}

TEST_CASE("NTT roundtrip property, 1000 random polynomials") {
    std::mt19937_64 rng(11);
    const FieldCtx small = tiny_ctx();
    const FieldCtx wide = desk_scale_ctx(rng);
    for (int i = 0; i < 500; ++i) {
        const DensePoly f = random_poly(small, rng, small.n());
        CHECK(ntt_interpolate(small, ntt_evaluate(small, f)).coeffs == f.coeffs);
    }
    for (int i = 0; i < 500; ++i) {
        const DensePoly f = random_poly(wide, rng, wide.n());
        CHECK(ntt_interpolate(wide, ntt_evaluate(wide, f)).coeffs == f.coeffs);
    }
}

TEST_CASE("NTT linearity and mul against schoolbook") {
    std::mt19937_64 rng(12);
    const FieldCtx ctx = desk_scale_ctx(rng);
    for (int i = 0; i < 100; ++i) {
        const DensePoly a = random_poly(ctx, rng, 30);
        const DensePoly b = random_poly(ctx, rng, 30);
        const DensePoly prod = poly_mul(ctx, a, b);  // 59 coeffs: schoolbook or NTT inside
        CHECK(prod.coeffs == schoolbook(ctx, a, b).coeffs);
        // linearity of evaluation
        const EvalTable ea = ntt_evaluate(ctx, a);
        const EvalTable eb = ntt_evaluate(ctx, b);
        const EvalTable esum = ntt_evaluate(ctx, poly_add(ctx, a, b));
        for (size_t t = 0; t < ctx.n(); ++t)
            CHECK(esum.values[t] == ctx.add(ea.values[t], eb.values[t]));
    }
    // a larger domain so the transform path actually runs (result > 64 coeffs)
    const FieldCtx big = FieldCtx::create(BigInt("18446744069414584321"), 256, 4, rng);
    for (int i = 0; i < 20; ++i) {
        std::vector<BigInt> ac(100), bc(100);
        for (auto& x : ac) x = rand_below(rng, big.p());
        for (auto& x : bc) x = rand_below(rng, big.p());
        ac.back() = 1;
        bc.back() = 1;
        const DensePoly a2{std::move(ac)}, b2{std::move(bc)};
        CHECK(poly_mul(big, a2, b2).coeffs == schoolbook(big, a2, b2).coeffs);
    }
}

TEST_CASE("expand_coset_product: spec hand case s=4, m=2, xi=4") {
    // p=17, n=8, omega=2 => xi = 4
    const FieldCtx ctx = tiny_ctx();
    const uint32_t exps[] = {0, 1};
    const CosetProduct cp = expand_coset_product(ctx, exps);
    CHECK(cp.lambda == 5);  // 1 + 4
    CHECK(cp.remainder.coeffs == std::vector<BigInt>{BigInt(4)});  // constant 4
    CHECK(cp.remainder.degree() <= 0);

    const uint32_t dup[] = {1, 1};
    CHECK_THROWS_AS((void)expand_coset_product(ctx, dup), Error);
}

TEST_CASE("expand_coset_product properties at desk scale") {
    std::mt19937_64 rng(13);
    const FieldCtx ctx = desk_scale_ctx(rng);  // n=64, m=4, s=16
    const uint64_t r = 6;
    const uint32_t exps[] = {0, 1, 2, 3, 4, 5};
    const CosetProduct cp = expand_coset_product(ctx, exps);

    // lambda equals the plain sum of the chosen xi powers
    BigInt lam(0);
    for (uint32_t e : exps) lam = ctx.add(lam, ctx.xi_pow(e));
    CHECK(cp.lambda == lam);
    CHECK(cp.remainder.degree() <= int64_t((r - 2) * ctx.m()));

    // root property: on every coset point, X^(rm) - lambda X^((r-1)m) + R = 0,
    // i.e. the word f + (-lambda) g equals -R there
    const EvalTable word = eval_monomial_word(ctx, r, ctx.neg(cp.lambda));
    const EvalTable neg_r = ntt_evaluate(ctx, poly_neg(ctx, cp.remainder));
    size_t on_points = 0;
    for (uint32_t e : exps)
        for (uint64_t i = 0; i < ctx.m(); ++i) {
            const uint64_t t = e + i * ctx.s();
            CHECK(word.values[t] == neg_r.values[t]);
            ++on_points;
        }
    CHECK(on_points == r * ctx.m());
}

TEST_CASE("eval_monomial_word matches the dense evaluation") {
    const FieldCtx ctx = tiny_ctx();  // r*m = 4, (r-1)*m = 2 with r=2
    // z = -5 = 12: x^4 - 5x^2 on the domain
    const EvalTable w = eval_monomial_word(ctx, 2, BigInt(12));
    CHECK(w.values == std::vector<BigInt>{BigInt(13), BigInt(13), BigInt(6), BigInt(2), BigInt(13),
                                          BigInt(13), BigInt(6), BigInt(2)});
    // z = 0: plain x^(rm)
    const EvalTable f = eval_monomial_word(ctx, 2, BigInt(0));
    for (uint64_t t = 0; t < ctx.n(); ++t) CHECK(f.values[t] == ctx.omega_pow(4 * t % 8));

    std::mt19937_64 rng(14);
    const FieldCtx wide = desk_scale_ctx(rng);
    for (int trial = 0; trial < 25; ++trial) {
        const BigInt z = rand_below(rng, wide.p());
        const uint64_t r = 2 + rng() % (wide.s() / 2 - 1);
        std::vector<BigInt> dense(r * wide.m() + 1, BigInt(0));
        dense[r * wide.m()] = 1;
        dense[(r - 1) * wide.m()] = z;
        const EvalTable via_ntt = ntt_evaluate(wide, poly_trim(std::move(dense)));
        const EvalTable direct = eval_monomial_word(wide, r, z);
        CHECK(via_ntt.values == direct.values);
    }
}
