#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsgap/analytic.hpp"
#include "rsgap/error.hpp"
#include "rsgap/modmath.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

using namespace rsgap;

namespace {

bool trial_division_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// third route for |Res(Phi_s, Q)|: complex product over the exact roots
double resultant_complex_abs(uint64_t s, const IntPoly& Q) {
    const long double pi = 3.141592653589793238462643383279502884L;
    std::complex<long double> prod(1.0L, 0.0L);
    for (uint64_t j = 0; j < s / 2; ++j) {
        const long double angle = pi * (2.0L * j + 1.0L) / (long double)(s / 2);
        const std::complex<long double> root(std::cos(angle), std::sin(angle));
        std::complex<long double> acc(0.0L, 0.0L);
        for (size_t i = Q.coeffs.size(); i-- > 0;)
            acc = acc * root + std::complex<long double>((long double)Q.coeffs[i].convert_to<double>(), 0.0L);
        prod *= acc;
    }
    return double(std::abs(prod));
}

}  // namespace

TEST_CASE("sieve agrees with trial division") {
    const SieveTable sieve(100000);
    for (uint64_t x = 0; x <= 1000; ++x) CHECK(sieve.is_prime(x) == trial_division_prime(x));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        const uint64_t x = rng() % 100001;
        CHECK(sieve.is_prime(x) == trial_division_prime(x));
    }
    CHECK(sieve.primes().front() == 2);
    CHECK(sieve.primes().back() == 99991);
}

TEST_CASE("theta and psi hand values") {
    const SieveTable sieve(1000);
    CHECK(chebyshev_theta(sieve, 10, 4, 1) == doctest::Approx(std::log(5.0)).epsilon(1e-13));
    CHECK(chebyshev_psi(sieve, 10, 4, 1) ==
          doctest::Approx(std::log(5.0) + std::log(3.0)).epsilon(1e-13));
    CHECK(chebyshev_theta(sieve, 1, 4, 1) == 0.0);
    // psi - theta = sum of Lambda over proper prime powers in the class
    const double diff = chebyshev_psi(sieve, 100, 4, 1) - chebyshev_theta(sieve, 100, 4, 1);
    // proper prime powers <= 100 that are = 1 mod 4: 9, 81 (ln 3 each), 25 (ln 5), 49 (ln 7)
    const double expect = 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(diff == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("theta/psi properties: psi >= theta, monotone in x") {
    const SieveTable sieve(200000);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
        const uint64_t n = 1 + rng() % 24;
        const uint64_t a = rng() % n;
        uint64_t x1 = rng() % 200001, x2 = rng() % 200001;
        if (x1 > x2) std::swap(x1, x2);
        const double t1 = chebyshev_theta(sieve, x1, n, a);
        const double t2 = chebyshev_theta(sieve, x2, n, a);
        const double p1 = chebyshev_psi(sieve, x1, n, a);
        const double p2 = chebyshev_psi(sieve, x2, n, a);
        CHECK(p1 >= t1);
        CHECK(p2 >= t2);
        CHECK(t2 >= t1);
        CHECK(p2 >= p1);
    }
    CHECK_THROWS_AS((void)chebyshev_theta(sieve, 200001, 4, 1), Error);
}

TEST_CASE("count_primes_in_ap") {
    CHECK(count_primes_in_ap(2, 100, 4, 1) == 11);
    CHECK(count_primes_in_ap(50, 40, 4, 1) == 0);  // empty interval
    CHECK(count_primes_in_ap(2, 2, 2, 0) == 1);    // 2 itself
    // cross-check against the bitmap sieve
    const SieveTable sieve(300000);
    for (uint64_t n : {3ULL, 4ULL, 16ULL, 256ULL}) {
        uint64_t direct = 0;
        for (uint32_t p : sieve.primes())
            if (p >= 1000 && p <= 250000 && p % n == 1) ++direct;
        CHECK(count_primes_in_ap(1000, 250000, n, 1) == direct);
    }
}

TEST_CASE("two independent sieves agree on [4^8, 8^8], class 1 mod 256") {
    const SieveTable bitmap(16777216);
    uint64_t direct = 0;
    for (uint32_t p : bitmap.primes())
        if (p >= 65536 && p % 256 == 1) ++direct;
    CHECK(count_primes_in_ap(65536, 16777216, 256, 1) == direct);
}

TEST_CASE("cyclotomic polynomials for 2-power index") {
    CHECK(cyclotomic_pow2(4).coeffs == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});
    const IntPoly p16 = cyclotomic_pow2(16);
    CHECK(p16.degree() == 8);
    CHECK(p16.coeffs.front() == 1);
    CHECK(p16.coeffs.back() == 1);
    CHECK_THROWS_AS((void)cyclotomic_pow2(6), Error);
    CHECK_THROWS_AS((void)cyclotomic_pow2(1), Error);
}

TEST_CASE("subset_sum_poly") {
    const uint32_t i1[] = {0, 1}, j1[] = {2, 3};
    const IntPoly q = subset_sum_poly(i1, j1);
    CHECK(q.coeffs == std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(-1), BigInt(-1)});
    const uint32_t same[] = {1, 5};
    CHECK(subset_sum_poly(same, same).is_zero());
    const uint32_t i3[] = {0, 2, 4}, j3[] = {1, 3, 5};
    CHECK(subset_sum_poly(i3, j3).coeffs.size() == 6);
    const uint32_t bad[] = {0};
    CHECK_THROWS_AS((void)subset_sum_poly(i1, bad), Error);
}

TEST_CASE("resultant: hand case and conventions") {
    // Res(x^2+1, 1+x-x^2-x^3) = 8 (evaluates to (2+2i)(2-2i))
    const IntPoly p{std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)}};
    const IntPoly q{std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(-1), BigInt(-1)}};
    CHECK(resultant_int(p, q) == 8);
    CHECK(resultant_int(p, IntPoly{}) == 0);
    // constant Q: Res(P, c) = c^deg(P)
    CHECK(resultant_int(p, IntPoly{{BigInt(5)}}) == 25);
    CHECK_THROWS_AS((void)resultant_int(IntPoly{{BigInt(3)}}, q), Error);
}

TEST_CASE("resultant three ways: Bareiss, CRT, complex product") {
    std::mt19937_64 rng(8);
    for (uint64_t s : {4ULL, 8ULL, 16ULL}) {
        const IntPoly phi = cyclotomic_pow2(s);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<BigInt> c(1 + rng() % (s / 2 + 4));
            for (auto& x : c) x = BigInt(int64_t(rng() % 9)) - 4;
            const IntPoly q = int_poly_trim(std::move(c));
            const BigInt a = resultant_int(phi, q);
            const BigInt b = resultant_cyclotomic_crt(s, q);
            CHECK(a == b);
            if (!q.is_zero() && boost::multiprecision::abs(a) < BigInt("9007199254740992")) {
                const double approx = resultant_complex_abs(s, q);
                const double exact = boost::multiprecision::abs(a).convert_to<double>();
                CHECK(std::abs(approx - exact) <= 1e-6 * std::max(1.0, exact));
            }
        }
    }
}

TEST_CASE("resultant mod p vanishes iff subset sums collide at an order-s root") {
    std::mt19937_64 rng(15);
    for (uint64_t s : {4ULL, 8ULL}) {
        const IntPoly phi = cyclotomic_pow2(s);
        // small primes p = 1 (mod s)
        std::vector<uint64_t> ps;
        for (uint64_t p = s + 1; ps.size() < 4; p += s)
            if (trial_division_prime(p)) ps.push_back(p);
        for (int trial = 0; trial < 60; ++trial) {
            const uint64_t r = 2 + rng() % (s / 2 - 1 ? s / 2 - 1 : 1);
            // full-range subsets on purpose: degenerate pairs are allowed here
            std::vector<uint32_t> I, J;
            while (I.size() < r) {
                const uint32_t e = uint32_t(rng() % s);
                if (std::find(I.begin(), I.end(), e) == I.end()) I.push_back(e);
            }
            while (J.size() < r) {
                const uint32_t e = uint32_t(rng() % s);
                if (std::find(J.begin(), J.end(), e) == J.end()) J.push_back(e);
            }
            std::sort(I.begin(), I.end());
            std::sort(J.begin(), J.end());
            if (I == J) continue;
            const IntPoly q = subset_sum_poly(I, J);
            const BigInt res = resultant_int(phi, q);
            for (uint64_t pv : ps) {
                const BigInt p(pv);
                // direct enumeration over all order-s elements
                const BigInt xi = find_root_of_unity(p, s, rng);
                bool collide = false;
                for (uint64_t c = 1; c < s; c += 2) {
                    const BigInt point = mod_pow(xi, BigInt(c), p);
                    BigInt acc(0);
                    for (size_t i = q.coeffs.size(); i-- > 0;) {
                        acc = (acc * point + q.coeffs[i]) % p;
                        if (acc < 0) acc += p;
                    }
                    if (acc == 0) collide = true;
                }
                CHECK((res % p == 0) == collide);
            }
        }
    }
}

TEST_CASE("half-range subset pairs never have zero resultant") {
    std::mt19937_64 rng(16);
    const auto audit = audit_resultant_bound(8, 2, 0, 0);
    CHECK(audit.mode == "exhaustive");
    CHECK(audit.pairs_examined == 30);  // C(4,2)^2 - 6 ordered distinct pairs
    CHECK(audit.zero_resultants == 0);
    CHECK(audit.violations == 0);
    CHECK(audit.crosschecked == 16);  // CRT route replayed on a prefix
    CHECK(audit.bound == 256);
    CHECK(audit.pass);
}

TEST_CASE("factorize") {
    auto f = factorize(BigInt(8));
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 3);
    f = factorize(BigInt("4294967297"));  // 641 * 6700417
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 641);
    CHECK(f[1].first == 6700417);
    f = factorize(BigInt(1));
    CHECK(f.empty());
    // product of two 9-digit primes forces the rho path
    const BigInt a("999999937"), b("999999893");
    f = factorize(a * b);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == b);
    CHECK(f[1].first == a);
}

TEST_CASE("bad prime audit: s=4 hand case and degenerate flagging") {
    SUBCASE("Res=8 has no factors in [256, 4096]") {
        std::vector<SubsetPair> pairs{{{0, 1}, {2, 3}}};
        const auto audit = audit_bad_primes(4, 2, pairs);
        CHECK(audit.pairs_examined == 1);
        CHECK(audit.max_bad_primes == 0);
        CHECK(audit.all_within_limit);
        CHECK(audit.all_confirmed);
        REQUIRE(audit.records.empty());  // nothing to report
    }
    SUBCASE("full-range cancelling pair is degenerate") {
        // xi^0 + xi^2 = 0 for s=4: I = {0, 2}, J = {1, 3} both sum to zero
        std::vector<SubsetPair> pairs{{{0, 2}, {1, 3}}};
        const auto audit = audit_bad_primes(4, 2, pairs);
        CHECK(audit.degenerate_pairs == 1);
        REQUIRE(audit.records.size() == 1);
        CHECK(audit.records[0].degenerate);
    }
}

TEST_CASE("collision confirmation for synthetic bad primes") {
    // s=8: take any pair, factor its resultant, and confirm each odd prime
    // factor (wherever it lies) produces the shared-root structure
    std::mt19937_64 rng(17);
    const IntPoly phi = cyclotomic_pow2(8);
    int confirmed = 0;
    for (int trial = 0; trial < 40 && confirmed < 10; ++trial) {
        std::vector<uint32_t> I, J;
        while (I.size() < 3) {
            const uint32_t e = uint32_t(rng() % 8);
            if (std::find(I.begin(), I.end(), e) == I.end()) I.push_back(e);
        }
        while (J.size() < 3) {
            const uint32_t e = uint32_t(rng() % 8);
            if (std::find(J.begin(), J.end(), e) == J.end()) J.push_back(e);
        }
        std::sort(I.begin(), I.end());
        std::sort(J.begin(), J.end());
        if (I == J) continue;
        const IntPoly q = subset_sum_poly(I, J);
        const BigInt res = resultant_int(phi, q);
        if (res == 0) continue;
        for (const auto& [p, mult] : factorize(res)) {
            if (p == 2) continue;  // p | s: Phi_s degenerates
            std::string detail;
            CHECK(confirm_collision_mod_p(8, q, p, &detail));
            ++confirmed;
        }
    }
    CHECK(confirmed >= 1);
    // a prime that does NOT divide the resultant must not confirm
    const uint32_t i2[] = {0, 1}, j2[] = {2, 3};
    const IntPoly q = subset_sum_poly(i2, j2);
    const BigInt res = resultant_int(cyclotomic_pow2(4), q);  // 8
    CHECK_FALSE(confirm_collision_mod_p(4, q, BigInt(5)));
    CHECK_FALSE(confirm_collision_mod_p(4, q, BigInt(13)));
}

TEST_CASE("T lower bound report") {
    SUBCASE("not desk-checkable for large s") {
        const auto rep = audit_T_lower_bound(64, 256);
        CHECK_FALSE(rep.desk_checkable);
        CHECK(rep.note == "not desk-checkable");
    }
    SUBCASE("s=4 tiny check runs") {
        const auto rep = audit_T_lower_bound(4, 16, 100000);
        CHECK(rep.desk_checkable);
        CHECK(rep.interval_lo == 256);
        CHECK(rep.interval_hi == 4096);
        // independent: count primes = 1 mod 16 in [256, 4096]
        uint64_t direct = 0;
        for (uint64_t x = 256; x <= 4096; ++x)
            if (trial_division_prime(x) && x % 16 == 1) ++direct;
        CHECK(rep.T == direct);
    }
    SUBCASE("phi(2^t) = 2^(t-1) sanity behind the n^{3/2} reduction") {
        // phi(n) * sqrt(n) = n^{3/2} / 2 for 2-power n
        for (uint64_t t = 1; t <= 20; ++t) {
            const uint64_t n = uint64_t(1) << t;
            uint64_t phi = 0;
            for (uint64_t x = 1; x <= n; ++x)
                if (std::gcd(x, n) == 1) ++phi;
            CHECK(phi == n / 2);
        }
    }
}
