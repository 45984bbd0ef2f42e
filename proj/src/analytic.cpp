#include "rsgap/analytic.hpp"

#include "rsgap/error.hpp"
#include "rsgap/modmath.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace rsgap {

namespace {

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

double kahan_add(double& sum, double& carry, double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    return sum;
}

// next r-combination of [0, limit) in lexicographic order; false when done
bool next_combination(std::vector<uint32_t>& c, uint32_t limit) {
    const size_t r = c.size();
    size_t i = r;
    while (i-- > 0) {
        if (c[i] + 1 <= limit - (r - i)) {
            ++c[i];
            for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> random_subset(std::mt19937_64& rng, uint32_t limit, uint32_t r) {
    std::vector<uint32_t> pool(limit);
    std::iota(pool.begin(), pool.end(), 0);
    for (uint32_t i = 0; i < r; ++i) {
        const uint32_t j = i + uint32_t(rng() % (limit - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<uint32_t> out(pool.begin(), pool.begin() + r);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt pow_bigint(BigInt base, uint64_t e) {
    BigInt r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// deterministic Brent-Pollard rho step count budgeted by caller
BigInt pollard_rho(const BigInt& n, uint64_t budget) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1; c < 64; ++c) {
        BigInt x(2), y(2), d(1);
        uint64_t steps = 0;
        while (d == 1) {
            if (++steps > budget) break;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(x > y ? x - y : y - x, n);
        }
        if (d != 1 && d != n) return d;
    }
    throw_budget("factorize: rho budget exhausted");
}

// gcd of polynomials over F_p, monic output; empty = gcd with zero input
std::vector<BigInt> poly_mod_gcd(std::vector<BigInt> a, std::vector<BigInt> b, const BigInt& p) {
    auto trim = [](std::vector<BigInt>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const BigInt lead_inv = mod_inv(b.back(), p);
        while (a.size() >= b.size()) {
            const BigInt q = a.back() * lead_inv % p;
            const size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                a[shift + i] = (a[shift + i] - q * b[i]) % p;
                if (a[shift + i] < 0) a[shift + i] += p;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

SieveTable::SieveTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw_param("sieve: limit must be >= 2");
    if (limit > 2'000'000'000ULL) throw_budget("sieve: limit above 2e9 not supported in-memory");
    const uint64_t half = limit / 2 + 1;  // index i <-> odd number 2i+1
    odd_bits_.assign((half + 63) / 64, 0);
    for (uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (odd_bits_[i / 64] >> (i % 64) & 1) continue;
        const uint64_t q = 2 * i + 1;
        for (uint64_t j = (q * q - 1) / 2; j < half; j += q) odd_bits_[j / 64] |= uint64_t(1) << (j % 64);
    }
    primes_.push_back(2);
    for (uint64_t i = 1; 2 * i + 1 <= limit; ++i)
        if (!(odd_bits_[i / 64] >> (i % 64) & 1)) primes_.push_back(uint32_t(2 * i + 1));
}

bool SieveTable::is_prime(uint64_t x) const {
    if (x > limit_) throw_budget("sieve: query above limit");
    if (x == 2) return true;
    if (x < 2 || x % 2 == 0) return false;
    const uint64_t i = (x - 1) / 2;
    return !(odd_bits_[i / 64] >> (i % 64) & 1);
}

double chebyshev_theta(const SieveTable& sieve, uint64_t x, uint64_t n, uint64_t a) {
    if (x > sieve.limit()) throw_budget("theta: x above sieve limit");
    if (n == 0) throw_param("theta: modulus must be positive");
    double sum = 0.0, carry = 0.0;
    const auto& primes = sieve.primes();
    const auto end = std::upper_bound(primes.begin(), primes.end(), x);
    for (auto it = primes.begin(); it != end; ++it)
        if (*it % n == a % n) kahan_add(sum, carry, std::log(double(*it)));
    return sum;
}

double chebyshev_psi(const SieveTable& sieve, uint64_t x, uint64_t n, uint64_t a) {
    if (x > sieve.limit()) throw_budget("psi: x above sieve limit");
    if (n == 0) throw_param("psi: modulus must be positive");
    double sum = 0.0, carry = 0.0;
    const auto& primes = sieve.primes();
    const auto end = std::upper_bound(primes.begin(), primes.end(), x);
    for (auto it = primes.begin(); it != end; ++it) {
        const double lp = std::log(double(*it));
        uint64_t q = *it;
        for (;;) {
            if (q % n == a % n) kahan_add(sum, carry, lp);
            if (q > x / *it) break;  // q * p would exceed x
            q *= *it;
        }
    }
    return sum;
}

uint64_t count_primes_in_ap(uint64_t lo, uint64_t hi, uint64_t n, uint64_t a) {
    if (n == 0) throw_param("count_primes_in_ap: modulus must be positive");
    if (hi < lo) return 0;
    if (hi > (uint64_t(1) << 54)) throw_budget("count_primes_in_ap: interval end too large");

    // base primes up to sqrt(hi), by plain trial sieve
    const uint64_t root = uint64_t(std::sqrt(double(hi))) + 2;
    std::vector<uint8_t> small(root + 1, 1);
    std::vector<uint64_t> base;
    for (uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    const uint64_t seg_len = 1 << 20;
    uint64_t count = 0;
    std::vector<uint8_t> seg;
    for (uint64_t start = lo; start <= hi; start += seg_len) {
        const uint64_t end = std::min(hi, start + seg_len - 1);
        seg.assign(end - start + 1, 1);
        for (uint64_t q : base) {
            if (q * q > end) break;
            uint64_t first = std::max(q * q, (start + q - 1) / q * q);
            for (uint64_t j = first; j <= end; j += q) seg[j - start] = 0;
        }
        // composites v have a factor q <= sqrt(v), and q's marking starts at
        // q*q <= v, so unmarked v >= 2 are exactly the primes
        for (uint64_t v = start; v <= end; ++v)
            if (v >= 2 && seg[v - start] && v % n == a % n) ++count;
        if (end == hi) break;
    }
    return count;
}

BigInt IntPoly::l1_norm() const {
    BigInt sum(0);
    for (const auto& c : coeffs) sum += boost::multiprecision::abs(c);
    return sum;
}

IntPoly int_poly_trim(std::vector<BigInt> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return IntPoly{std::move(coeffs)};
}

IntPoly cyclotomic_pow2(uint64_t s) {
    if (s < 2 || !is_pow2(s)) throw_param("cyclotomic_pow2: s must be a power of two >= 2");
    std::vector<BigInt> c(s / 2 + 1, BigInt(0));
    c[0] = 1;
    c[s / 2] = 1;
    return IntPoly{std::move(c)};
}

IntPoly subset_sum_poly(std::span<const uint32_t> I, std::span<const uint32_t> J) {
    if (I.size() != J.size()) throw_param("subset_sum_poly: |I| != |J|");
    uint32_t top = 0;
    for (uint32_t i : I) top = std::max(top, i);
    for (uint32_t j : J) top = std::max(top, j);
    std::vector<BigInt> c(top + 1, BigInt(0));
    for (uint32_t i : I) c[i] += 1;
    for (uint32_t j : J) c[j] -= 1;
    return int_poly_trim(std::move(c));
}

BigInt resultant_int(const IntPoly& P, const IntPoly& Q) {
    if (P.degree() < 1) throw_param("resultant_int: P must be nonconstant");
    if (Q.is_zero()) return 0;
    const size_t dp = size_t(P.degree());
    const size_t dq = size_t(Q.degree());
    const size_t dim = dp + dq;
    if (dq == 0) return pow_bigint(Q.coeffs[0], dp);

    // Sylvester matrix: dq rows of P's coefficients, dp rows of Q's.
    std::vector<std::vector<BigInt>> mat(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (size_t row = 0; row < dq; ++row)
        for (size_t i = 0; i <= dp; ++i) mat[row][row + i] = P.coeffs[dp - i];
    for (size_t row = 0; row < dp; ++row)
        for (size_t i = 0; i <= dq; ++i) mat[dq + row][row + i] = Q.coeffs[dq - i];

    // Bareiss fraction-free elimination
    BigInt prev(1);
    int sign = 1;
    for (size_t c = 0; c + 1 < dim; ++c) {
        size_t pivot = c;
        while (pivot < dim && mat[pivot][c] == 0) ++pivot;
        if (pivot == dim) return 0;
        if (pivot != c) {
            std::swap(mat[pivot], mat[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < dim; ++i) {
            for (size_t j = c + 1; j < dim; ++j)
                mat[i][j] = (mat[c][c] * mat[i][j] - mat[i][c] * mat[c][j]) / prev;
            mat[i][c] = 0;
        }
        prev = mat[c][c];
    }
    return sign > 0 ? mat[dim - 1][dim - 1] : -mat[dim - 1][dim - 1];
}

BigInt resultant_cyclotomic_crt(uint64_t s, const IntPoly& Q) {
    if (s < 2 || !is_pow2(s)) throw_param("resultant_cyclotomic_crt: s must be a power of two >= 2");
    if (Q.is_zero()) return 0;
    // |Res| <= l1(Q)^(s/2): the s/2 roots lie on the unit circle
    const BigInt bound = pow_bigint(Q.l1_norm(), s / 2);
    const BigInt window = 2 * bound + 1;

    BigInt modulus(1);
    BigInt value(0);
    BigInt t(1ULL << 40);  // CRT primes q = s*t + 1 around 2^40 * s
    std::mt19937_64 rng(0x5eedULL);
    while (modulus < window) {
        BigInt q = BigInt(s) * t + 1;
        ++t;
        if (!is_probable_prime(q)) continue;
        // product of Q over the order-s elements: powers xi^c, c odd
        const BigInt xi = find_root_of_unity(q, s, rng);
        BigInt prod(1);
        BigInt point = xi;
        const BigInt xi_sq = xi * xi % q;
        for (uint64_t c = 1; c < s; c += 2) {
            BigInt acc(0);
            for (size_t i = Q.coeffs.size(); i-- > 0;) acc = (acc * point + Q.coeffs[i]) % q;
            if (acc < 0) acc += q;
            prod = prod * acc % q;
            point = point * xi_sq % q;
        }
        // CRT merge
        if (modulus == 1) {
            value = prod;
            modulus = q;
        } else {
            const BigInt inv = mod_inv(modulus % q, q);
            BigInt diff = (prod - value % q) % q;
            if (diff < 0) diff += q;
            value += modulus * (diff * inv % q);
            modulus *= q;
        }
    }
    value %= modulus;
    if (value > modulus / 2) value -= modulus;  // centered representative
    return value;
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt x, uint64_t rho_budget) {
    if (x < 0) x = -x;
    std::vector<std::pair<BigInt, unsigned>> out;
    if (x <= 1) return out;
    auto push = [&out](const BigInt& p) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    };
    for (uint64_t d = 2; d < 100'000 && BigInt(d) * d <= x; d == 2 ? d = 3 : d += 2)
        while (x % d == 0) {
            push(BigInt(d));
            x /= d;
        }
    if (x == 1) return out;

    // recursive rho split of the remaining cofactor
    std::vector<BigInt> stack{x};
    std::vector<BigInt> primes;
    while (!stack.empty()) {
        BigInt v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_probable_prime(v)) {
            primes.push_back(v);
            continue;
        }
        const BigInt d = pollard_rho(v, rho_budget);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) push(p);
    return out;
}

ResultantBoundAudit audit_resultant_bound(uint64_t s, uint64_t r, uint64_t sample_count,
                                          uint64_t seed, uint64_t exhaustive_budget) {
    if (s < 4 || !is_pow2(s)) throw_param("audit_resultant_bound: s must be a power of two >= 4");
    const uint32_t half = uint32_t(s / 2);
    if (r < 2 || r > half) throw_param("audit_resultant_bound: need 2 <= r <= s/2");

    ResultantBoundAudit audit;
    audit.s = s;
    audit.r = r;
    audit.bound = pow_bigint(BigInt(2 * r), s / 2);
    audit.max_abs_resultant = 0;

    const IntPoly phi = cyclotomic_pow2(s);
    auto examine = [&](const std::vector<uint32_t>& I, const std::vector<uint32_t>& J) {
        if (I == J) return;
        const IntPoly q = subset_sum_poly(I, J);
        const BigInt res = resultant_int(phi, q);
        // the first few pairs also go through the independent CRT route
        if (audit.crosschecked < 16) {
            if (resultant_cyclotomic_crt(s, q) != res)
                throw_internal("resultant cross-check failed: Bareiss vs CRT disagree");
            ++audit.crosschecked;
        }
        const BigInt res_abs = boost::multiprecision::abs(res);
        ++audit.pairs_examined;
        if (res_abs == 0) ++audit.zero_resultants;
        if (res_abs > audit.bound) ++audit.violations;
        if (res_abs > audit.max_abs_resultant) audit.max_abs_resultant = res_abs;
    };

    const BigInt subsets = binomial(half, r);
    if (subsets * subsets <= exhaustive_budget) {
        audit.mode = "exhaustive";
        std::vector<uint32_t> I(r);
        std::iota(I.begin(), I.end(), 0);
        do {
            std::vector<uint32_t> J(r);
            std::iota(J.begin(), J.end(), 0);
            do {
                examine(I, J);
            } while (next_combination(J, half));
        } while (next_combination(I, half));
    } else {
        audit.mode = "sampled";
        std::mt19937_64 rng(seed);
        while (audit.pairs_examined < sample_count) {
            const auto I = random_subset(rng, half, uint32_t(r));
            const auto J = random_subset(rng, half, uint32_t(r));
            if (I == J) continue;
            examine(I, J);
        }
    }
    audit.max_ratio = audit.max_abs_resultant.convert_to<double>() / audit.bound.convert_to<double>();
    audit.pass = audit.violations == 0 && audit.zero_resultants == 0;
    return audit;
}

bool confirm_collision_mod_p(uint64_t s, const IntPoly& Q, const BigInt& p, std::string* detail) {
    // common root of Phi_s and Q over the algebraic closure of F_p
    std::vector<BigInt> phi_mod(s / 2 + 1, BigInt(0));
    phi_mod[0] = 1 % p;
    phi_mod[s / 2] = 1 % p;
    std::vector<BigInt> q_mod;
    q_mod.reserve(Q.coeffs.size());
    for (const auto& c : Q.coeffs) {
        BigInt v = c % p;
        if (v < 0) v += p;
        q_mod.push_back(v);
    }
    const auto g = poly_mod_gcd(phi_mod, q_mod, p);
    const bool shares_root = g.size() != 1;  // nonconstant gcd (or Q = 0 mod p)
    if (!shares_root) {
        if (detail) *detail = "gcd(Phi_s, Q) constant mod p";
        return false;
    }
    if ((p - 1) % s == 0) {
        // exhibit the colliding sums inside F_p itself
        std::mt19937_64 rng(0xC011u);
        const BigInt xi = find_root_of_unity(p, s, rng);
        for (uint64_t c = 1; c < s; c += 2) {
            const BigInt point = mod_pow(xi, BigInt(c), p);
            BigInt acc(0);
            for (size_t i = q_mod.size(); i-- > 0;) acc = (acc * point + q_mod[i]) % p;
            if (acc == 0) {
                if (detail)
                    *detail = "sums collide in F_p at the order-s element xi^" + std::to_string(c);
                return true;
            }
        }
        if (detail) *detail = "gcd nontrivial but no F_p root found";
        return false;
    }
    if (detail) *detail = "collision lives in an extension field (s does not divide p-1)";
    return true;
}

BadPrimeAudit audit_bad_primes(uint64_t s, uint64_t r, std::span<const SubsetPair> pairs) {
    if (s < 4 || !is_pow2(s)) throw_param("audit_bad_primes: s must be a power of two >= 4");
    BadPrimeAudit audit;
    audit.s = s;
    audit.r = r;
    audit.bound = pow_bigint(BigInt(2 * r), s / 2);
    audit.b_limit = std::log(double(s)) / std::log(4.0);
    audit.all_within_limit = true;
    audit.all_confirmed = true;

    const BigInt lo = pow_bigint(BigInt(4), s);
    const BigInt hi = pow_bigint(BigInt(8), s);
    const IntPoly phi = cyclotomic_pow2(s);

    for (const auto& pair : pairs) {
        if (pair.I.size() != r || pair.J.size() != r)
            throw_param("audit_bad_primes: pair size != r");
        ++audit.pairs_examined;
        const IntPoly q = subset_sum_poly(pair.I, pair.J);
        const BigInt res = resultant_int(phi, q);

        BadPrimeRecord rec;
        rec.pair = pair;
        rec.res_value = res;
        if (res == 0) {
            rec.degenerate = true;  // "degenerate: identically colliding"
            ++audit.degenerate_pairs;
            audit.records.push_back(std::move(rec));
            continue;
        }
        for (const auto& [prime, mult] : factorize(res)) {
            if (prime >= lo && prime <= hi) rec.bad_primes.push_back(prime);
        }
        audit.max_bad_primes = std::max<uint64_t>(audit.max_bad_primes, rec.bad_primes.size());
        if (double(rec.bad_primes.size()) > audit.b_limit) audit.all_within_limit = false;

        rec.collisions_confirmed = true;
        for (const auto& p : rec.bad_primes)
            if (!confirm_collision_mod_p(s, q, p)) rec.collisions_confirmed = false;
        if (!rec.collisions_confirmed) audit.all_confirmed = false;
        if (!rec.bad_primes.empty()) audit.records.push_back(std::move(rec));
    }
    return audit;
}

BadPrimeAudit audit_bad_primes_sampled(uint64_t s, uint64_t r, uint64_t pair_count, uint64_t seed) {
    const uint32_t half = uint32_t(s / 2);
    if (r < 2 || r > half) throw_param("audit_bad_primes: need 2 <= r <= s/2");
    std::mt19937_64 rng(seed);
    std::vector<SubsetPair> pairs;
    pairs.reserve(pair_count);
    for (uint64_t i = 0; i < pair_count; ++i) {
        SubsetPair pr{random_subset(rng, half, uint32_t(r)), random_subset(rng, half, uint32_t(r))};
        if (pr.I == pr.J) {
            --i;
            continue;
        }
        pairs.push_back(std::move(pr));
    }
    return audit_bad_primes(s, r, pairs);
}

TBoundReport audit_T_lower_bound(uint64_t s, uint64_t n, uint64_t sieve_budget) {
    TBoundReport rep;
    rep.s = s;
    rep.n = n;
    rep.interval_lo = pow_bigint(BigInt(4), s);
    rep.interval_hi = pow_bigint(BigInt(8), s);
    if (rep.interval_hi > sieve_budget) {
        rep.desk_checkable = false;
        rep.note = "not desk-checkable";
        return rep;
    }
    rep.desk_checkable = true;
    const uint64_t lo = rep.interval_lo.convert_to<uint64_t>();
    const uint64_t hi = rep.interval_hi.convert_to<uint64_t>();
    rep.T = count_primes_in_ap(lo, hi, n, 1);
    const double hid = double(hi);
    rep.lower_bound = hid / (std::pow(double(n), 1.5) * std::log(hid));
    rep.bound_held = double(rep.T) >= rep.lower_bound;
    rep.note = "pre-asymptotic desk-scale comparison, not a theorem check";
    return rep;
}

}  // namespace rsgap
