// Number-theoretic audit kernel: Chebyshev functions over arithmetic
// progressions, 2-power cyclotomic resultants with their size bounds, and
// bad-prime counting.
#pragma once

#include "rsgap/bigint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsgap {

class SieveTable {
public:
    explicit SieveTable(uint64_t limit);

    uint64_t limit() const { return limit_; }
    bool is_prime(uint64_t x) const;
    const std::vector<uint32_t>& primes() const { return primes_; }

private:
    uint64_t limit_;
    std::vector<uint64_t> odd_bits_;  // bit i <-> 2i+1 composite
    std::vector<uint32_t> primes_;
};

// theta(x; n, a) = sum of ln p over primes p <= x, p = a (mod n).
double chebyshev_theta(const SieveTable& sieve, uint64_t x, uint64_t n, uint64_t a);
// psi adds Lambda(p^e) = ln p for proper prime powers p^e <= x in the class.
double chebyshev_psi(const SieveTable& sieve, uint64_t x, uint64_t n, uint64_t a);

// Exact count of primes in [lo, hi] congruent to a mod n. Segmented sieve,
// independent of SieveTable (the two cross-check each other in tests).
uint64_t count_primes_in_ap(uint64_t lo, uint64_t hi, uint64_t n, uint64_t a);

// Exact integer polynomials; coeffs[i] multiplies x^i.
struct IntPoly {
    std::vector<BigInt> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int64_t degree() const { return int64_t(coeffs.size()) - 1; }
    BigInt l1_norm() const;
};

IntPoly int_poly_trim(std::vector<BigInt> coeffs);

// x^(s/2) + 1, the s-th cyclotomic polynomial for 2-power s >= 2. Other
// indices are unsupported by design.
IntPoly cyclotomic_pow2(uint64_t s);

// sum_{i in I} x^i - sum_{j in J} x^j with |I| = |J|; overlaps cancel.
IntPoly subset_sum_poly(std::span<const uint32_t> I, std::span<const uint32_t> J);

// Exact resultant via Sylvester matrix with Bareiss fraction-free
// elimination. P must be nonconstant.
BigInt resultant_int(const IntPoly& P, const IntPoly& Q);

// Independent route for P = x^(s/2)+1: evaluate the product of Q over the
// order-s roots modulo CRT primes = 1 (mod s) and reconstruct. |Res| is
// bounded by l1(Q)^(s/2) since the roots sit on the unit circle.
BigInt resultant_cyclotomic_crt(uint64_t s, const IntPoly& Q);

// Trial division then Brent-Pollard rho; factors returned ascending.
// Throws budget_exceeded if a cofactor resists within the rho budget.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt x, uint64_t rho_budget = 4'000'000);

struct SubsetPair {
    std::vector<uint32_t> I;
    std::vector<uint32_t> J;
};

struct ResultantBoundAudit {
    uint64_t s = 0, r = 0;
    std::string mode;  // "exhaustive" or "sampled"
    uint64_t pairs_examined = 0;
    uint64_t violations = 0;   // |Res| > (2r)^(s/2)
    uint64_t zero_resultants = 0;
    uint64_t crosschecked = 0; // pairs recomputed via the CRT route
    BigInt bound;              // (2r)^(s/2)
    BigInt max_abs_resultant;
    double max_ratio = 0.0;    // max |Res| / bound
    bool pass = false;
};

// Checks |Res(Phi_s, Q_{I,J})| <= (2r)^(s/2) over distinct r-subset pairs
// with exponents drawn from [0, s/2). Exhaustive when the ordered pair count
// fits the budget, sampled otherwise.
ResultantBoundAudit audit_resultant_bound(uint64_t s, uint64_t r, uint64_t sample_count,
                                          uint64_t seed, uint64_t exhaustive_budget = 200'000);

struct BadPrimeRecord {
    SubsetPair pair;
    BigInt res_value;
    std::vector<BigInt> bad_primes;  // prime factors inside [4^s, 8^s]
    bool degenerate = false;         // Res = 0: identically colliding pair
    bool collisions_confirmed = false;
};

struct BadPrimeAudit {
    uint64_t s = 0, r = 0;
    BigInt bound;            // (2r)^(s/2)
    double b_limit = 0.0;    // log4(s)
    uint64_t pairs_examined = 0;
    uint64_t degenerate_pairs = 0;
    uint64_t max_bad_primes = 0;
    bool all_within_limit = false;
    bool all_confirmed = false;
    std::vector<BadPrimeRecord> records;  // only pairs with findings
};

// Factors each pair's resultant, lists prime factors inside [4^s, 8^s],
// checks their count B <= log4(s), and confirms every bad prime makes the
// two subset sums collide (a common root of Phi_s and Q over F_p, exhibited
// in F_p itself when s | p-1, else via a nontrivial gcd).
BadPrimeAudit audit_bad_primes(uint64_t s, uint64_t r, std::span<const SubsetPair> pairs);
BadPrimeAudit audit_bad_primes_sampled(uint64_t s, uint64_t r, uint64_t pair_count, uint64_t seed);

// Confirms p divides Res(Phi_s, Q) by exhibiting the shared root structure.
bool confirm_collision_mod_p(uint64_t s, const IntPoly& Q, const BigInt& p,
                             std::string* detail = nullptr);

struct TBoundReport {
    bool desk_checkable = false;
    std::string note;
    uint64_t s = 0, n = 0;
    BigInt interval_lo, interval_hi;  // [4^s, 8^s]
    uint64_t T = 0;                   // primes = 1 (mod n) in the interval
    double lower_bound = 0.0;         // 8^s / (n^(3/2) ln 8^s)
    bool bound_held = false;          // descriptive, pre-asymptotic scale
};

// Compares the exact prime count T against the asymptotic lower-bound
// expression at tiny scales. Never asserted as a theorem.
TBoundReport audit_T_lower_bound(uint64_t s, uint64_t n, uint64_t sieve_budget = 100'000'000);

}  // namespace rsgap
