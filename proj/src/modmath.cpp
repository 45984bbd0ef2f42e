#include "rsgap/modmath.hpp"

#include "rsgap/error.hpp"

#include <bit>

namespace rsgap {

namespace {

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// largest N for which the 13-witness set is proven deterministic
const BigInt kDeterministicLimit("3317044064679887385961981");
constexpr uint64_t kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// one strong-probable-prime round; n odd, n-1 = d * 2^r
bool mr_round(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
    BigInt x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& mod) {
    if (mod <= 0) throw_param("mod_pow: modulus must be positive");
    base %= mod;
    if (base < 0) base += mod;
    BigInt result = 1;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

BigInt mod_inv(const BigInt& a, const BigInt& mod) {
    BigInt r0 = mod, r1 = a % mod;
    if (r1 < 0) r1 += mod;
    BigInt t0 = 0, t1 = 1;
    while (r1 != 0) {
        const BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) throw_param("mod_inv: element not invertible");
    if (t0 < 0) t0 += mod;
    return t0;
}

bool is_probable_prime(const BigInt& n, unsigned rounds, std::mt19937_64& rng) {
    if (n < 2) return false;
    for (uint64_t q : kSmallWitnesses) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    if (n < kDeterministicLimit) {
        for (uint64_t a : kSmallWitnesses)
            if (!mr_round(n, BigInt(a), d, r)) return false;
        return true;
    }
    for (unsigned i = 0; i < rounds; ++i) {
        const BigInt a = 2 + rand_below(rng, n - 3);
        if (!mr_round(n, a, d, r)) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n, unsigned rounds) {
    // seed from the operand so the verdict is reproducible run to run
    std::mt19937_64 rng(0x72736761705F6D72ULL ^ BigIntHash{}(n));
    return is_probable_prime(n, rounds, rng);
}

BigInt find_root_of_unity(const BigInt& p, uint64_t n, std::mt19937_64& rng) {
    if (n == 0 || !is_pow2(n)) throw_param("find_root_of_unity: n must be a power of two");
    if ((p - 1) % n != 0) throw_param("find_root_of_unity: n does not divide p-1");
    const BigInt cofactor = (p - 1) / n;
    if (n == 1) return BigInt(1);
    for (;;) {
        const BigInt g = 2 + rand_below(rng, p - 2);
        const BigInt w = mod_pow(g, cofactor, p);
        if (mod_pow(w, BigInt(n / 2), p) != 1) return w;  // exact order n for 2-power n
    }
}

FieldCtx::FieldCtx(BigInt p, uint64_t n, BigInt omega, uint64_t coset_size)
    : p_(std::move(p)), n_(n), m_(coset_size) {
    if (n_ == 0 || !is_pow2(n_)) throw_param("FieldCtx: n must be a power of two");
    if (m_ == 0 || !is_pow2(m_) || n_ % m_ != 0) throw_param("FieldCtx: m must be a power of two dividing n");
    s_ = n_ / m_;
    if (p_ < 3) throw_param("FieldCtx: p must be an odd prime");
    if ((p_ - 1) % n_ != 0) throw_param("FieldCtx: n does not divide p-1");
    if (!is_probable_prime(p_)) throw_param("FieldCtx: p failed primality test");
    fits64_ = p_ <= BigInt(~uint64_t(0));
    if (fits64_) p64_ = p_.convert_to<uint64_t>();

    omega %= p_;
    if (omega < 0) omega += p_;
    // exact-order certificate: omega^n = 1, omega^(n/2) != 1
    if (mod_pow(omega, BigInt(n_), p_) != 1) throw_param("FieldCtx: omega^n != 1");
    if (n_ > 1 && mod_pow(omega, BigInt(n_ / 2), p_) == 1) throw_param("FieldCtx: omega has order below n");

    omega_pow_.reserve(n_);
    BigInt acc = 1;
    for (uint64_t i = 0; i < n_; ++i) {
        omega_pow_.push_back(acc);
        acc = mul(acc, omega);
    }
    xi_ = omega_pow_[m_ % n_];
    if (s_ > 1 && mod_pow(xi_, BigInt(s_ / 2), p_) == 1) throw_internal("FieldCtx: xi has order below s");
}

FieldCtx FieldCtx::create(BigInt p, uint64_t n, uint64_t coset_size, std::mt19937_64& rng) {
    BigInt omega = find_root_of_unity(p, n, rng);
    return FieldCtx(std::move(p), n, std::move(omega), coset_size);
}

BigInt FieldCtx::add(const BigInt& a, const BigInt& b) const {
    if (fits64_) {
        const uint64_t x = a.convert_to<uint64_t>(), y = b.convert_to<uint64_t>();
        const uint64_t r = (x >= p64_ - y && y != 0) ? x - (p64_ - y) : x + y;
        return BigInt(r);
    }
    BigInt r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

BigInt FieldCtx::sub(const BigInt& a, const BigInt& b) const {
    if (fits64_) {
        const uint64_t x = a.convert_to<uint64_t>(), y = b.convert_to<uint64_t>();
        return BigInt(x >= y ? x - y : x + (p64_ - y));
    }
    BigInt r = a - b;
    if (r < 0) r += p_;
    return r;
}

BigInt FieldCtx::mul(const BigInt& a, const BigInt& b) const {
    if (fits64_) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(a.convert_to<uint64_t>()) * b.convert_to<uint64_t>();
        return BigInt(static_cast<uint64_t>(prod % p64_));
    }
    return a * b % p_;
}

BigInt FieldCtx::neg(const BigInt& a) const { return a == 0 ? BigInt(0) : BigInt(p_ - a); }

BigInt FieldCtx::inv(const BigInt& a) const {
    if (a % p_ == 0) throw Error(Status::param_error, "field inverse of zero");
    return mod_inv(a, p_);
}

BigInt FieldCtx::pow(const BigInt& a, const BigInt& e) const { return mod_pow(a, e, p_); }

BigInt FieldCtx::reduce(const BigInt& a) const {
    BigInt r = a % p_;
    if (r < 0) r += p_;
    return r;
}

std::vector<BigInt> FieldCtx::coset(uint64_t j_exponent) const {
    if (j_exponent >= s_) throw_param("coset: exponent out of range [0, s)");
    std::vector<BigInt> out;
    out.reserve(m_);
    for (uint64_t i = 0; i < m_; ++i) out.push_back(omega_pow_[(j_exponent + i * s_) % n_]);
    return out;
}

void FieldCtx::self_test(std::mt19937_64& rng) const {
    const BigInt x = 1 + rand_below(rng, p_ - 1);
    if (mod_pow(x, p_ - 1, p_) != 1) throw_internal("FieldCtx: Fermat self-test failed");
}

}  // namespace rsgap
