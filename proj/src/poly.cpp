#include "rsgap/poly.hpp"

#include "rsgap/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace rsgap {

namespace {

const BigInt kZero(0);

constexpr size_t kSchoolbookLimit = 64;  // result sizes below this skip the NTT

// in-place radix-2 transform of size |a|, natural order in and out
void ntt_radix2(const FieldCtx& ctx, std::vector<BigInt>& a, bool inverse) {
    const size_t sz = a.size();
    if (sz == 1) return;
    for (size_t i = 1, j = 0; i < sz; ++i) {  // bit-reversal permutation
        size_t bit = sz >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const uint64_t n = ctx.n();
    for (size_t len = 2; len <= sz; len <<= 1) {
        // root of order len: omega^(n/len), conjugated for the inverse
        const uint64_t step = n / len;
        const BigInt wlen = inverse ? ctx.omega_pow(n - step) : ctx.omega_pow(step);
        for (size_t i = 0; i < sz; i += len) {
            BigInt w(1);
            for (size_t j = 0; j < len / 2; ++j) {
                const BigInt u = a[i + j];
                const BigInt v = ctx.mul(a[i + j + len / 2], w);
                a[i + j] = ctx.add(u, v);
                a[i + j + len / 2] = ctx.sub(u, v);
                w = ctx.mul(w, wlen);
            }
        }
    }
}

}  // namespace

const BigInt& DensePoly::coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : kZero; }

DensePoly poly_trim(std::vector<BigInt> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return DensePoly{std::move(coeffs)};
}

DensePoly poly_add(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(a.coeff(i), b.coeff(i));
    return poly_trim(std::move(out));
}

DensePoly poly_sub(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(a.coeff(i), b.coeff(i));
    return poly_trim(std::move(out));
}

DensePoly poly_neg(const FieldCtx& ctx, const DensePoly& a) {
    std::vector<BigInt> out(a.coeffs.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = ctx.neg(a.coeffs[i]);
    return DensePoly{std::move(out)};
}

DensePoly poly_mul(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const size_t out_size = a.coeffs.size() + b.coeffs.size() - 1;
    if (out_size <= kSchoolbookLimit || out_size > ctx.n()) {
        std::vector<BigInt> out(out_size, kZero);
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j)
                out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs[i], b.coeffs[j]));
        return poly_trim(std::move(out));
    }
    size_t sz = 1;
    while (sz < out_size) sz <<= 1;  // sz <= n, so a root of order sz exists
    std::vector<BigInt> fa(a.coeffs), fb(b.coeffs);
    fa.resize(sz, kZero);
    fb.resize(sz, kZero);
    ntt_radix2(ctx, fa, false);
    ntt_radix2(ctx, fb, false);
    for (size_t i = 0; i < sz; ++i) fa[i] = ctx.mul(fa[i], fb[i]);
    ntt_radix2(ctx, fa, true);
    const BigInt inv_sz = ctx.inv(BigInt(sz));
    for (auto& c : fa) c = ctx.mul(c, inv_sz);
    fa.resize(out_size);
    return poly_trim(std::move(fa));
}

BigInt poly_eval(const FieldCtx& ctx, const DensePoly& a, const BigInt& x) {
    BigInt acc(0);
    for (size_t i = a.coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), a.coeffs[i]);
    return acc;
}

EvalTable ntt_evaluate(const FieldCtx& ctx, const DensePoly& f) {
    if (f.coeffs.size() > ctx.n())
        throw_param("ntt_evaluate: degree >= n, reduce first");
    std::vector<BigInt> a(f.coeffs);
    a.resize(ctx.n(), kZero);
    ntt_radix2(ctx, a, false);
    return EvalTable{std::move(a)};
}

DensePoly ntt_interpolate(const FieldCtx& ctx, const EvalTable& w) {
    if (w.values.size() != ctx.n()) throw_param("ntt_interpolate: table length != n");
    std::vector<BigInt> a(w.values);
    ntt_radix2(ctx, a, true);
    const BigInt inv_n = ctx.inv(BigInt(ctx.n()));
    for (auto& c : a) c = ctx.mul(c, inv_n);
    return poly_trim(std::move(a));
}

CosetProduct expand_coset_product(const FieldCtx& ctx, std::span<const uint32_t> xi_exponents) {
    const size_t r = xi_exponents.size();
    if (r < 2) throw_param("expand_coset_product: need r >= 2 exponents");
    std::unordered_set<uint32_t> seen;
    for (uint32_t e : xi_exponents) {
        if (e >= ctx.s()) throw_param("expand_coset_product: exponent out of range [0, s)");
        if (!seen.insert(e).second) throw_param("expand_coset_product: duplicate exponent");
    }

    // product of (Y - xi^e) in Y = X^m
    std::vector<BigInt> prod{BigInt(1)};
    for (uint32_t e : xi_exponents) {
        const BigInt c = ctx.neg(ctx.xi_pow(e));
        std::vector<BigInt> next(prod.size() + 1, kZero);
        for (size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], prod[i]);
            next[i] = ctx.add(next[i], ctx.mul(prod[i], c));
        }
        prod = std::move(next);
    }

    CosetProduct out;
    out.lambda = ctx.neg(prod[r - 1]);  // coefficient of Y^(r-1) is -sum(xi^e)

    const uint64_t m = ctx.m();
    std::vector<BigInt> rem((r - 2) * m + 1, kZero);
    for (size_t i = 0; i + 2 <= r; ++i) rem[i * m] = prod[i];  // inflate Y^i -> X^(i*m)
    out.remainder = poly_trim(std::move(rem));

    if (out.remainder.degree() > int64_t((r - 2) * m))
        throw_internal("expand_coset_product: remainder degree bound violated");
    return out;
}

EvalTable eval_monomial_word(const FieldCtx& ctx, uint64_t r, const BigInt& z) {
    const uint64_t n = ctx.n(), m = ctx.m();
    if (r < 1 || r * m > n) throw_param("eval_monomial_word: r*m out of range");
    std::vector<BigInt> vals;
    vals.reserve(n);
    const BigInt zr = ctx.reduce(z);
    for (uint64_t t = 0; t < n; ++t) {
        const BigInt& f = ctx.omega_pow(t * (r * m) % n);
        const BigInt& g = ctx.omega_pow(t * ((r - 1) * m) % n);
        vals.push_back(ctx.add(f, ctx.mul(zr, g)));
    }
    return EvalTable{std::move(vals)};
}

}  // namespace rsgap
