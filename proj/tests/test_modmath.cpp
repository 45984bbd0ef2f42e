#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsgap/error.hpp"
#include "rsgap/modmath.hpp"

#include <set>

using namespace rsgap;

namespace {

// independent oracle: trial division up to sqrt(n)
bool trial_division_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("field arithmetic, p = 17") {
    std::mt19937_64 rng(1);
    FieldCtx ctx(BigInt(17), 8, BigInt(2), 2);
    CHECK(ctx.inv(BigInt(5)) == 7);  // 5*7 = 35 = 2*17+1
    CHECK(ctx.pow(BigInt(2), BigInt(8)) == 1);
    for (int x = 1; x < 17; ++x) {
        CHECK(ctx.mul(BigInt(x), BigInt(1)) == x);
        CHECK(ctx.mul(BigInt(x), ctx.inv(BigInt(x))) == 1);
    }
    CHECK_THROWS_AS((void)ctx.inv(BigInt(0)), Error);
    ctx.self_test(rng);
}

TEST_CASE("wide arithmetic agrees with small-path arithmetic") {
    // same computations mod a 64-bit prime and a deliberately wide copy
    const BigInt p("18446744069414584321");  // 2^64 - 2^32 + 1
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const BigInt a = rand_below(rng, p);
        const BigInt b = rand_below(rng, p);
        const BigInt expect_mul = a * b % p;
        const BigInt expect_add = (a + b) % p;
        // fits64 path
        FieldCtx ctx(p, 1, BigInt(1), 1);
        CHECK(ctx.mul(a, b) == expect_mul);
        CHECK(ctx.add(a, b) == expect_add);
        CHECK(ctx.sub(a, b) == (a - b + p) % p);
    }
}

TEST_CASE("mod_pow and mod_inv basics") {
    CHECK(mod_pow(BigInt(2), BigInt(10), BigInt(1000)) == 24);
    CHECK(mod_inv(BigInt(3), BigInt(7)) == 5);
    CHECK_THROWS_AS((void)mod_inv(BigInt(4), BigInt(8)), Error);
}

TEST_CASE("Miller-Rabin against trial division") {
    CHECK(is_probable_prime(BigInt(2)));
    CHECK(is_probable_prime(BigInt("4294967311")));
    CHECK(trial_division_prime(4294967311ULL));
    CHECK_FALSE(is_probable_prime(BigInt("4294967297")));  // 641 * 6700417
    CHECK_FALSE(trial_division_prime(4294967297ULL));
    for (uint64_t n = 2; n < 2000; ++n)
        CHECK(is_probable_prime(BigInt(n)) == trial_division_prime(n));
    // a couple of wide primes: 2^89-1 (Mersenne), and a known composite
    std::mt19937_64 rng(3);
    CHECK(is_probable_prime(BigInt("618970019642690137449562111"), 64, rng));
    CHECK_FALSE(is_probable_prime(BigInt("618970019642690137449562113"), 64, rng));
}

TEST_CASE("roots of unity: orders certified") {
    std::mt19937_64 rng(42);
    SUBCASE("p=17, n=8") {
        const BigInt w = find_root_of_unity(BigInt(17), 8, rng);
        CHECK(mod_pow(w, BigInt(8), BigInt(17)) == 1);
        CHECK(mod_pow(w, BigInt(4), BigInt(17)) != 1);
        // exhaustive: the order-8 elements mod 17 are {2,8,9,15}
        std::set<BigInt> order8;
        for (int x = 1; x < 17; ++x) {
            bool ord8 = mod_pow(BigInt(x), BigInt(8), BigInt(17)) == 1 &&
                        mod_pow(BigInt(x), BigInt(4), BigInt(17)) != 1;
            if (ord8) order8.insert(BigInt(x));
        }
        CHECK(order8.count(w) == 1);
    }
    SUBCASE("p=17, n=16: generators") {
        const BigInt w = find_root_of_unity(BigInt(17), 16, rng);
        CHECK(mod_pow(w, BigInt(8), BigInt(17)) != 1);
        std::set<BigInt> seen;
        BigInt acc(1);
        for (int i = 0; i < 16; ++i) {
            seen.insert(acc);
            acc = acc * w % 17;
        }
        CHECK(seen.size() == 16);  // w generates all of F_17^x
    }
    SUBCASE("p=17, n=3 rejected") {
        CHECK_THROWS_AS((void)find_root_of_unity(BigInt(17), 3, rng), Error);
    }
}

TEST_CASE("cosets partition the domain") {
    FieldCtx ctx(BigInt(17), 8, BigInt(2), 2);  // s = 4, m = 2, xi = 4
    SUBCASE("spec values") {
        const auto h0 = ctx.coset(0);
        CHECK(h0 == std::vector<BigInt>{BigInt(1), BigInt(16)});
        for (const auto& a : h0) CHECK(mod_pow(a, BigInt(2), BigInt(17)) == 1);
        const auto h1 = ctx.coset(1);
        CHECK(h1 == std::vector<BigInt>{BigInt(2), BigInt(15)});
        for (const auto& a : h1) CHECK(mod_pow(a, BigInt(2), BigInt(17)) == 4);
    }
    SUBCASE("disjoint union over j covers <omega>") {
        std::set<BigInt> all;
        for (uint64_t j = 0; j < ctx.s(); ++j) {
            for (const auto& a : ctx.coset(j)) {
                CHECK(all.insert(a).second);  // disjoint
                CHECK(mod_pow(a, BigInt(ctx.m()), ctx.p()) == ctx.xi_pow(j));
            }
        }
        CHECK(all.size() == ctx.n());
    }
    SUBCASE("m = n: single coset is the whole domain") {
        FieldCtx whole(BigInt(17), 8, BigInt(2), 8);  // s = 1
        const auto h = whole.coset(0);
        CHECK(h.size() == 8);
        std::set<BigInt> uniq(h.begin(), h.end());
        CHECK(uniq.size() == 8);
    }
}

TEST_CASE("Fermat property on random nonzero elements") {
    const BigInt p("340282366920938463463374607431768211507");  // 2^128 + 51
    REQUIRE(is_probable_prime(p));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const BigInt x = 1 + rand_below(rng, p - 1);
        CHECK(mod_pow(x, p - 1, p) == 1);
    }
}
