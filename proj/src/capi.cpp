#include "rsgap.h"

#include "rsgap/analytic.hpp"
#include "rsgap/error.hpp"
#include "rsgap/forge.hpp"
#include "rsgap/serialize.hpp"
#include "rsgap/version.hpp"

#include <cstring>
#include <new>
#include <string>

struct rsgap_params {
    rsgap::ParamSet v;
};

struct rsgap_cx {
    rsgap::Counterexample v;
};

namespace {

thread_local std::string g_last_error;

rsgap_status set_error(rsgap::Status st, const std::string& msg) {
    g_last_error = msg;
    return static_cast<rsgap_status>(st);
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// runs fn, translating exceptions into status codes + last_error
template <typename Fn>
rsgap_status guarded(Fn&& fn) {
    try {
        fn();
        return RSGAP_OK;
    } catch (const rsgap::Error& e) {
        return set_error(e.status(), e.what());
    } catch (const std::exception& e) {
        return set_error(rsgap::Status::internal_error, e.what());
    } catch (...) {
        return set_error(rsgap::Status::internal_error, "unknown error");
    }
}

rsgap::ForgeOptions make_forge_options(const rsgap_forge_options* opts) {
    rsgap::ForgeOptions fo;
    if (!opts) return fo;
    fo.seed = opts->seed;
    if (opts->max_candidates) fo.max_candidates = opts->max_candidates;
    if (opts->audit_exhaustive_budget) fo.audit_exhaustive_budget = opts->audit_exhaustive_budget;
    if (opts->audit_sample_pairs) fo.audit_sample_pairs = opts->audit_sample_pairs;
    if (opts->witness_budget) fo.witness_budget = opts->witness_budget;
    fo.threads = opts->threads;
    if (opts->mr_rounds) fo.mr_rounds = opts->mr_rounds;
    fo.sequential_scan = opts->sequential_scan != 0;
    if (opts->fixed_prime) fo.fixed_prime = rsgap::bigint_parse(opts->fixed_prime);
    return fo;
}

}  // namespace

extern "C" {

const char* rsgap_version(void) { return rsgap::kVersion; }

const char* rsgap_last_error(void) { return g_last_error.c_str(); }

void rsgap_string_free(char* s) { delete[] s; }

rsgap_status rsgap_params_derive(const char* c_rational, uint64_t u, uint32_t v, uint32_t alpha,
                                 const char* profile, uint64_t m_override, rsgap_params** out) {
    return guarded([&] {
        if (!c_rational || !profile || !out) rsgap::throw_param("null argument");
        rsgap::RateSpec rate{u, v};
        std::optional<uint64_t> m;
        if (m_override) m = m_override;
        auto ps = rsgap::derive_params(rsgap::ratio_parse(c_rational), rate, alpha,
                                       rsgap::profile_parse(profile), m);
        *out = new rsgap_params{std::move(ps)};
    });
}

rsgap_status rsgap_params_from_json(const char* json, rsgap_params** out) {
    return guarded([&] {
        if (!json || !out) rsgap::throw_param("null argument");
        rsgap::Json j;
        try {
            j = rsgap::Json::parse(json);
        } catch (const nlohmann::json::exception& e) {
            rsgap::throw_format(std::string("not valid JSON: ") + e.what());
        }
        *out = new rsgap_params{rsgap::params_from_json(j)};
    });
}

rsgap_status rsgap_params_to_json(const rsgap_params* ps, char** json_out) {
    return guarded([&] {
        if (!ps || !json_out) rsgap::throw_param("null argument");
        rsgap::Json j = rsgap::params_to_json(ps->v);
        j["identities"] = rsgap::identity_report_to_json(rsgap::check_identities(ps->v));
        *json_out = dup_string(j.dump(2) + "\n");
    });
}

void rsgap_params_free(rsgap_params* ps) { delete ps; }

rsgap_status rsgap_forge(const rsgap_params* ps, const rsgap_forge_options* opts, rsgap_cx** out) {
    return guarded([&] {
        if (!ps || !out) rsgap::throw_param("null argument");
        *out = new rsgap_cx{rsgap::build_counterexample(ps->v, make_forge_options(opts))};
    });
}

rsgap_status rsgap_cx_to_json(const rsgap_cx* cx, char** json_out) {
    return guarded([&] {
        if (!cx || !json_out) rsgap::throw_param("null argument");
        *json_out = dup_string(rsgap::cx_serialize(cx->v));
    });
}

rsgap_status rsgap_cx_from_json(const char* json, rsgap_cx** out) {
    return guarded([&] {
        if (!json || !out) rsgap::throw_param("null argument");
        *out = new rsgap_cx{rsgap::cx_parse(json)};
    });
}

void rsgap_cx_free(rsgap_cx* cx) { delete cx; }

rsgap_status rsgap_verify(const rsgap_cx* cx, const char* level, uint64_t oracle_budget,
                          uint32_t threads, char** report_json, int* all_pass) {
    return guarded([&] {
        if (!cx || !level || !report_json) rsgap::throw_param("null argument");
        rsgap::VerifyOptions vo;
        vo.level = rsgap::verify_level_parse(level);
        if (oracle_budget) vo.oracle_budget = oracle_budget;
        vo.threads = threads;
        const auto rep = rsgap::verify_counterexample(cx->v, vo);
        *report_json = dup_string(rsgap::report_to_json(rep).dump(2) + "\n");
        if (all_pass) *all_pass = rep.overall_pass ? 1 : 0;
    });
}

rsgap_status rsgap_audit_sums(uint32_t s, uint32_t r, const char* p_decimal,
                              uint64_t exhaustive_budget, uint64_t sample_pairs, uint64_t seed,
                              char** report_json) {
    return guarded([&] {
        if (!p_decimal || !report_json) rsgap::throw_param("null argument");
        const rsgap::BigInt p = rsgap::bigint_parse(p_decimal);
        std::mt19937_64 rng(seed);
        const rsgap::BigInt omega = rsgap::find_root_of_unity(p, s, rng);
        const rsgap::FieldCtx ctx(p, s, omega, 1);  // m=1: the domain is the subgroup itself
        const auto audit = rsgap::run_sum_audit(ctx, r, exhaustive_budget ? exhaustive_budget : 1'000'000,
                                                sample_pairs ? sample_pairs : 1'000'000, seed);
        rsgap::Json j = rsgap::sum_audit_to_json(audit);
        j["s"] = s;
        j["r"] = r;
        j["p"] = p_decimal;
        j["pass"] = audit.collisions_found == 0;
        *report_json = dup_string(j.dump(2) + "\n");
    });
}

rsgap_status rsgap_audit_resultant(uint32_t s, uint32_t r, uint64_t samples, uint64_t seed,
                                   uint64_t exhaustive_budget, char** report_json) {
    return guarded([&] {
        if (!report_json) rsgap::throw_param("null argument");
        const auto audit = rsgap::audit_resultant_bound(s, r, samples ? samples : 1000, seed,
                                                        exhaustive_budget ? exhaustive_budget : 200'000);
        *report_json = dup_string(rsgap::resultant_audit_to_json(audit).dump(2) + "\n");
    });
}

rsgap_status rsgap_audit_bad_primes(uint32_t s, uint32_t r, uint64_t pairs, uint64_t seed,
                                    char** report_json) {
    return guarded([&] {
        if (!report_json) rsgap::throw_param("null argument");
        const auto audit = rsgap::audit_bad_primes_sampled(s, r, pairs ? pairs : 100, seed);
        *report_json = dup_string(rsgap::bad_prime_audit_to_json(audit).dump(2) + "\n");
    });
}

rsgap_status rsgap_audit_theta(uint64_t x, uint64_t n, uint64_t a, uint64_t sieve_limit,
                               char** report_json) {
    return guarded([&] {
        if (!report_json) rsgap::throw_param("null argument");
        const uint64_t limit = sieve_limit ? sieve_limit : std::max<uint64_t>(x, 2);
        if (x > limit) rsgap::throw_budget("theta: x above sieve limit");
        const rsgap::SieveTable sieve(limit);
        rsgap::Json j;
        j["x"] = x;
        j["n"] = n;
        j["a"] = a;
        j["theta"] = rsgap::chebyshev_theta(sieve, x, n, a);
        j["psi"] = rsgap::chebyshev_psi(sieve, x, n, a);
        j["sieve_limit"] = limit;
        *report_json = dup_string(j.dump(2) + "\n");
    });
}

rsgap_status rsgap_audit_t_bound(uint32_t s, uint64_t n, uint64_t sieve_budget, char** report_json) {
    return guarded([&] {
        if (!report_json) rsgap::throw_param("null argument");
        const auto rep = rsgap::audit_T_lower_bound(s, n, sieve_budget ? sieve_budget : 100'000'000);
        *report_json = dup_string(rsgap::t_bound_report_to_json(rep).dump(2) + "\n");
    });
}

}  // extern "C"
