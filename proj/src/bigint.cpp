#include "rsgap/bigint.hpp"

#include "rsgap/error.hpp"

#include <cctype>

namespace rsgap {

std::string ratio_str(const Ratio& r) { return r.num.str() + "/" + r.den.str(); }

Ratio ratio_parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Ratio(bigint_parse(s), 1);
    Ratio r(bigint_parse(s.substr(0, slash)), bigint_parse(s.substr(slash + 1)));
    return r;
}

double ratio_to_double(const Ratio& r) {
    return r.num.convert_to<double>() / r.den.convert_to<double>();
}

std::string bigint_str(const BigInt& x) { return x.str(); }

BigInt bigint_parse(const std::string& s) {
    if (s.empty()) throw_format("empty integer string");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw_format("bad integer string: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw_format("bad integer string: '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ceil_rational_power(const BigInt& base, const BigInt& num, const BigInt& den) {
    if (base <= 0 || num < 0 || den <= 0) throw_param("ceil_rational_power: bad arguments");
    if (num == 0) return 1;
    const BigInt target = boost::multiprecision::pow(base, num.convert_to<unsigned>());
    // binary search for smallest y with y^den >= base^num
    BigInt lo = 1, hi = 2;
    const unsigned d = den.convert_to<unsigned>();
    while (boost::multiprecision::pow(hi, d) < target) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, d) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BigInt rand_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0) throw_param("rand_below: bound must be positive");
    const size_t bits = boost::multiprecision::msb(bound) + 1;
    const size_t words = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (size_t i = 0; i < words; ++i) x = (x << 64) | BigInt(rng());
        x >>= words * 64 - bits;
        if (x < bound) return x;
    }
}

size_t BigIntHash::operator()(const BigInt& x) const noexcept {
    // mix the low 128 bits; sums audited here are near-uniform mod p
    const uint64_t lo = (x & BigInt(~uint64_t(0))).convert_to<uint64_t>();
    const uint64_t hi = ((x >> 64) & BigInt(~uint64_t(0))).convert_to<uint64_t>();
    uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<size_t>(h);
}

}  // namespace rsgap
