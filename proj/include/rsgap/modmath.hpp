// Prime-field contexts with a 2-power root-of-unity ladder, wide modular
// arithmetic, and Miller-Rabin primality testing.
#pragma once

#include "rsgap/bigint.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rsgap {

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& mod);
BigInt mod_inv(const BigInt& a, const BigInt& mod);  // extended gcd; throws on gcd != 1

// Miller-Rabin. Deterministic witness set below 3.317e24 (composite verdicts
// are always correct there); `rounds` random witnesses above.
bool is_probable_prime(const BigInt& n, unsigned rounds, std::mt19937_64& rng);
bool is_probable_prime(const BigInt& n, unsigned rounds = 64);  // self-seeded from n

// Samples g until g^((p-1)/n) passes the exact-order certificate
// x^(n/2) != 1 (n a power of two). Throws if n does not divide p-1.
BigInt find_root_of_unity(const BigInt& p, uint64_t n, std::mt19937_64& rng);

// Multiplicative domain <omega> of 2-power size n inside F_p, with the
// subgroup ladder xi = omega^m of order s = n/m. Immutable once built.
class FieldCtx {
public:
    // Validates: p probably prime, n | p-1, n and m powers of two, m | n,
    // omega has exact order n. Precomputes the n powers of omega.
    FieldCtx(BigInt p, uint64_t n, BigInt omega, uint64_t coset_size);

    // Convenience: sample omega from rng.
    static FieldCtx create(BigInt p, uint64_t n, uint64_t coset_size, std::mt19937_64& rng);

    const BigInt& p() const { return p_; }
    uint64_t n() const { return n_; }
    uint64_t m() const { return m_; }
    uint64_t s() const { return s_; }
    const BigInt& omega() const { return omega_pow_[1 % n_]; }
    const BigInt& xi() const { return xi_; }

    const BigInt& omega_pow(uint64_t e) const { return omega_pow_[e % n_]; }
    BigInt xi_pow(uint64_t e) const { return omega_pow_[(e % s_) * m_ % n_]; }

    BigInt add(const BigInt& a, const BigInt& b) const;
    BigInt sub(const BigInt& a, const BigInt& b) const;
    BigInt mul(const BigInt& a, const BigInt& b) const;
    BigInt neg(const BigInt& a) const;
    BigInt inv(const BigInt& a) const;  // throws on zero
    BigInt pow(const BigInt& a, const BigInt& e) const;
    BigInt reduce(const BigInt& a) const;  // canonical representative in [0, p)

    // Coset H_j = {a in <omega> : a^m = xi^j}, returned as the m elements
    // omega^(j + i*s), i in [0, m).
    std::vector<BigInt> coset(uint64_t j_exponent) const;

    // Fermat spot check on a random nonzero element; throws internal_error
    // on failure.
    void self_test(std::mt19937_64& rng) const;

private:
    BigInt p_;
    bool fits64_ = false;
    uint64_t p64_ = 0;
    uint64_t n_ = 0, m_ = 0, s_ = 0;
    BigInt xi_;
    std::vector<BigInt> omega_pow_;
};

}  // namespace rsgap
