#include "rsgap/params.hpp"

#include "rsgap/error.hpp"

#include <cmath>

namespace rsgap {

namespace {

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

uint32_t log2_exact(uint64_t x) {
    uint32_t e = 0;
    while ((uint64_t(1) << e) < x) ++e;
    return e;
}

void validate_rate(const RateSpec& rate) {
    if (rate.v == 0 || rate.v >= 63) throw_param("rate: v out of range");
    if (rate.u >= (uint64_t(1) << (rate.v - 1)))
        throw_param("rate: u >= 2^(v-1), rho must lie below 1/2");
}

}  // namespace

std::string profile_str(Profile p) { return p == Profile::strict ? "strict" : "desk"; }

Profile profile_parse(const std::string& s) {
    if (s == "strict") return Profile::strict;
    if (s == "desk") return Profile::desk;
    throw_param("unknown profile '" + s + "' (expected strict or desk)");
}

LResult compute_L(const RateSpec& rate, const Ratio& C) {
    validate_rate(rate);
    if (C.num <= 0) throw_param("C must be positive");
    if (rate.u == 0) throw_param("compute_L: rho = 0 has no finite first branch");
    const double rho = double(rate.u) / std::ldexp(1.0, int(rate.v));
    const double first = ratio_to_double(C) / (rho * std::log(1.0 / (2.0 * rho)));
    const double second = 9.0 / (2.0 * std::log(8.0));
    if (first >= second) return {first, "C/(rho*ln(1/(2*rho)))"};
    return {second, "9/(2*ln 8)"};
}

uint64_t choose_K(double L_val) {
    if (!(L_val > 0)) throw_param("choose_K: L must be positive");
    // floor(log2 L) without transcendental rounding: ilogb is exact on binary
    // doubles, including at exact powers of two.
    const int e = std::ilogb(L_val);
    if (e < -1 || e > 61) throw_param("choose_K: L out of range");
    return uint64_t(1) << (e + 1);
}

ParamSet derive_params(const Ratio& C, const RateSpec& rate, uint32_t alpha, Profile profile,
                       std::optional<uint64_t> m_override) {
    validate_rate(rate);
    if (C.num <= 0) throw_param("C must be positive");
    if (alpha == 0 || alpha >= 32) throw_param("alpha out of range [1, 31]");
    if (rate.u == 0 && profile == Profile::strict)
        throw_param("rate: u must be positive (strict profile)");

    ParamSet ps;
    ps.profile = profile;
    ps.z_count_exponent = C;
    ps.rate = rate;
    ps.alpha = alpha;
    ps.m_override = m_override;

    if (alpha < rate.v) throw_param("alpha < v");
    ps.s = uint64_t(1) << alpha;
    ps.r = rate.u * (uint64_t(1) << (alpha - rate.v)) + 2;  // rho*s + 2

    if (rate.u > 0) {
        const LResult L = compute_L(rate, C);
        const uint64_t K = choose_K(L.value);
        // guard the selection: 2^e <= L < 2^(e+1) = K <= 2L must hold exactly
        if (!(double(K) >= L.value && double(K) <= 2.0 * L.value))
            throw_internal("choose_K guard failed");
        ps.log_scale_min = L.value;
        ps.log_scale_branch = L.dominant_branch;
        ps.log_scale = K;
        ps.prime_exponent_bound = double(K) * std::log(8.0);

        if (profile == Profile::strict) {
            if (m_override.has_value()) throw_param("m_override not allowed in strict profile");
            if (alpha < log2_exact(K)) throw_param("alpha < log2(K)");
            if (K * uint64_t(alpha) > ps.s) throw_param("2^alpha/alpha < K");
            const uint64_t exp_m = ps.s / K;  // K | 2^alpha since K is a 2-power <= 2^alpha
            if (exp_m - alpha > 40) throw_param("m = 2^(2^alpha/K - alpha) too large");
            ps.m = uint64_t(1) << (exp_m - alpha);
        }
    }

    if (profile == Profile::desk) {
        if (!m_override.has_value()) throw_param("desk profile requires m");
        if (!is_pow2(*m_override)) throw_param("m must be a power of two");
        ps.m = *m_override;
    }

    if (ps.m == 0) throw_internal("m not derived");
    if (ps.s > (uint64_t(1) << 31) / ps.m) throw_param("n = s*m too large");
    ps.n = ps.s * ps.m;
    ps.k = (ps.r - 2) * ps.m;
    ps.delta = Ratio(BigInt(ps.s - ps.r), BigInt(ps.s));
    ps.eta = Ratio(BigInt(2), BigInt(ps.s));

    if (ps.r > ps.s) throw_param("r > s, delta would be negative");

    const IdentityReport rep = check_identities(ps);
    if (!rep.all_ok) throw_internal("derived parameters violate identities");
    return ps;
}

IdentityReport check_identities(const ParamSet& ps) {
    IdentityReport rep;
    auto push = [&rep](const std::string& name, bool ok, const std::string& lhs, const std::string& rhs) {
        rep.identities.push_back({name, ok ? "pass" : "fail", lhs, rhs});
        rep.all_ok = rep.all_ok && ok;
    };

    // (1) rho = k/n
    const Ratio rho = ps.rho();
    const Ratio k_over_n(BigInt(ps.k), BigInt(ps.n));
    push("rho = k/n", ratio_eq(rho, k_over_n), ratio_str(rho), ratio_str(k_over_n));

    // delta = 1 - r/s
    const Ratio one_minus_r_over_s(BigInt(ps.s - ps.r), BigInt(ps.s));
    push("delta = 1 - r/s", ratio_eq(ps.delta, one_minus_r_over_s), ratio_str(ps.delta),
         ratio_str(one_minus_r_over_s));

    // eta = (1 - rho) - delta = 2/s
    const Ratio gap = ratio_sub(ratio_sub(Ratio(1, 1), rho), ps.delta);
    push("eta = (1-rho)-delta = 2/s", ratio_eq(ps.eta, gap) && ratio_eq(ps.eta, Ratio(2, BigInt(ps.s))),
         ratio_str(ps.eta), ratio_str(gap));

    // (2) K * log2(n) = s, strict only
    if (ps.profile == Profile::strict) {
        const uint64_t log2n = log2_exact(ps.n);
        const BigInt lhs = BigInt(ps.log_scale.value_or(0)) * log2n;
        push("K*log2(n) = s", (uint64_t(1) << log2n) == ps.n && lhs == ps.s, lhs.str(),
             std::to_string(ps.s));
    } else {
        rep.identities.push_back({"K*log2(n) = s", "waived (desk)", "", ""});
    }
    return rep;
}

}  // namespace rsgap
