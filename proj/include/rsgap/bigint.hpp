// Arbitrary-precision integers and exact (non-normalizing) rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rsgap {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational kept as-given: "46/64" stays 46/64, never 23/32.
// Certificates compare rationals by cross-multiplication only.
struct Ratio {
    BigInt num;
    BigInt den;  // > 0

    Ratio() : num(0), den(1) {}
    Ratio(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den <= 0) throw std::invalid_argument("Ratio: denominator must be positive");
    }
};

inline bool ratio_eq(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
}

// sign of a - b
inline int ratio_cmp(const Ratio& a, const Ratio& b) {
    const BigInt lhs = a.num * b.den;
    const BigInt rhs = b.num * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline Ratio ratio_sub(const Ratio& a, const Ratio& b) {
    return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::string ratio_str(const Ratio& r);
Ratio ratio_parse(const std::string& s);  // accepts "num/den" or a plain integer
double ratio_to_double(const Ratio& r);

// Decimal-string conversions used by the wire formats.
std::string bigint_str(const BigInt& x);
BigInt bigint_parse(const std::string& s);

// 2^e as a BigInt.
inline BigInt pow2(uint64_t e) { return BigInt(1) << e; }

BigInt binomial(uint64_t n, uint64_t k);

// Smallest integer y with y^den >= base^num (i.e. ceil(base^(num/den))).
BigInt ceil_rational_power(const BigInt& base, const BigInt& num, const BigInt& den);

// Uniform in [0, bound), assembled from 64-bit draws with rejection.
BigInt rand_below(std::mt19937_64& rng, const BigInt& bound);

// Truncation-based hash; adequate for dedup sets over field elements.
struct BigIntHash {
    size_t operator()(const BigInt& x) const noexcept;
};

}  // namespace rsgap
