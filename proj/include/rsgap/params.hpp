// Parameter tower: rate, subgroup sizes, proximity radius, and the exact
// arithmetic identities tying them together.
#pragma once

#include "rsgap/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsgap {

enum class Profile { strict, desk };

std::string profile_str(Profile p);
Profile profile_parse(const std::string& s);

// rho = u / 2^v in [0, 1/2); u = 0 is the degenerate zero-rate corner used
// by the tiny oracle instance and is accepted only on the desk profile.
struct RateSpec {
    uint64_t u = 0;
    uint32_t v = 1;
};

struct ParamSet {
    Profile profile = Profile::desk;
    Ratio z_count_exponent;               // "C": demands >= n^C distinct z
    RateSpec rate;
    uint32_t alpha = 0;                   // s = 2^alpha
    std::optional<uint64_t> m_override;   // desk only

    std::optional<double> log_scale_min;  // L(rho, C); absent when u = 0
    std::string log_scale_branch;         // which branch of L dominated; empty when u = 0
    std::optional<uint64_t> log_scale;    // K, power of two in [L, 2L]
    uint64_t s = 0;                       // subgroup order, 2^alpha
    uint64_t r = 0;                       // cosets used; r = rho*s + 2
    uint64_t m = 0;                       // coset size, power of two
    uint64_t n = 0;                       // domain size, s*m
    uint64_t k = 0;                       // max codeword degree, (r-2)*m
    Ratio delta;                          // 1 - r/s, kept unreduced over s
    Ratio eta;                            // 2/s, the gap below capacity
    std::optional<double> prime_exponent_bound;  // A = K ln 8; prime search keeps p <= n^A

    Ratio rho() const { return Ratio(BigInt(rate.u), pow2(rate.v)); }
};

struct LResult {
    double value;
    std::string dominant_branch;  // "C/(rho*ln(1/(2*rho)))" or "9/(2*ln 8)"
};

// L(rho, C) = max{ C / (rho ln(1/(2 rho))), 9 / (2 ln 8) }, natural logs.
LResult compute_L(const RateSpec& rate, const Ratio& C);

// K = 2^(floor(log2 L) + 1); exact binary comparison via ilogb, so ties at
// exact powers of two take the next power.
uint64_t choose_K(double L_val);

ParamSet derive_params(const Ratio& C, const RateSpec& rate, uint32_t alpha, Profile profile,
                       std::optional<uint64_t> m_override = std::nullopt);

struct IdentityVerdict {
    std::string name;
    std::string status;  // "pass", "fail", "waived (desk)"
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::vector<IdentityVerdict> identities;
    bool all_ok = true;  // waived entries do not count as failures
};

// Exact-rational verdicts for rho = k/n, delta = 1 - r/s, eta = 2/s and,
// on strict profiles, K*log2(n) = s.
IdentityReport check_identities(const ParamSet& ps);

}  // namespace rsgap
