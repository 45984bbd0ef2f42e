#include "rsgap/serialize.hpp"

#include "rsgap/error.hpp"
#include "rsgap/version.hpp"

#include <algorithm>
#include <map>

namespace rsgap {

namespace {

// Groups sorted indices by residue mod stride; emits [start, stride, count]
// runs when every residue class is a full arithmetic progression.
std::optional<Json> compress_agreement(const std::vector<uint32_t>& idx, uint64_t stride) {
    if (idx.empty() || stride == 0) return std::nullopt;
    std::map<uint32_t, std::vector<uint32_t>> groups;
    for (uint32_t t : idx) groups[t % stride].push_back(t);
    Json runs = Json::array();
    for (const auto& [res, g] : groups) {
        if (g.front() != res) return std::nullopt;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] != res + i * stride) return std::nullopt;
        runs.push_back(Json::array({res, stride, g.size()}));
    }
    return runs;
}

std::vector<uint32_t> expand_agreement(const Json& runs) {
    std::vector<uint32_t> idx;
    for (const auto& run : runs) {
        if (!run.is_array() || run.size() != 3) throw_format("agreement run must be [start, stride, count]");
        const uint64_t start = run[0].get<uint64_t>();
        const uint64_t stride = run[1].get<uint64_t>();
        const uint64_t count = run[2].get<uint64_t>();
        for (uint64_t i = 0; i < count; ++i) idx.push_back(uint32_t(start + i * stride));
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

template <typename T>
T require(const Json& j, const char* key) {
    if (!j.contains(key)) throw_format(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw_format(std::string("bad type for field '") + key + "'");
    }
}

BigInt require_bigint(const Json& j, const char* key) { return bigint_parse(require<std::string>(j, key)); }
Ratio require_ratio(const Json& j, const char* key) { return ratio_parse(require<std::string>(j, key)); }

}  // namespace

Json params_to_json(const ParamSet& ps) {
    Json j;
    j["profile"] = profile_str(ps.profile);
    j["C"] = ratio_str(ps.z_count_exponent);
    j["u"] = ps.rate.u;
    j["v"] = ps.rate.v;
    j["alpha"] = ps.alpha;
    if (ps.m_override.has_value()) j["m_override"] = *ps.m_override;
    if (ps.log_scale_min.has_value()) j["L"] = *ps.log_scale_min;
    if (!ps.log_scale_branch.empty()) j["L_branch"] = ps.log_scale_branch;
    if (ps.log_scale.has_value()) j["K"] = *ps.log_scale;
    j["s"] = ps.s;
    j["r"] = ps.r;
    j["m"] = ps.m;
    j["n"] = ps.n;
    j["k"] = ps.k;
    j["delta"] = ratio_str(ps.delta);
    j["eta"] = ratio_str(ps.eta);
    if (ps.prime_exponent_bound.has_value()) j["A"] = *ps.prime_exponent_bound;
    return j;
}

ParamSet params_from_json(const Json& j) {
    ParamSet ps;
    ps.profile = profile_parse(require<std::string>(j, "profile"));
    ps.z_count_exponent = require_ratio(j, "C");
    ps.rate.u = require<uint64_t>(j, "u");
    ps.rate.v = require<uint32_t>(j, "v");
    ps.alpha = require<uint32_t>(j, "alpha");
    if (j.contains("m_override")) ps.m_override = j.at("m_override").get<uint64_t>();
    if (j.contains("L")) ps.log_scale_min = j.at("L").get<double>();
    if (j.contains("L_branch")) ps.log_scale_branch = j.at("L_branch").get<std::string>();
    if (j.contains("K")) ps.log_scale = j.at("K").get<uint64_t>();
    ps.s = require<uint64_t>(j, "s");
    ps.r = require<uint64_t>(j, "r");
    ps.m = require<uint64_t>(j, "m");
    ps.n = require<uint64_t>(j, "n");
    ps.k = require<uint64_t>(j, "k");
    ps.delta = require_ratio(j, "delta");
    ps.eta = require_ratio(j, "eta");
    if (j.contains("A")) ps.prime_exponent_bound = j.at("A").get<double>();
    return ps;
}

Json identity_report_to_json(const IdentityReport& rep) {
    Json arr = Json::array();
    for (const auto& idv : rep.identities) {
        Json e;
        e["name"] = idv.name;
        e["status"] = idv.status;
        if (!idv.lhs.empty() || !idv.rhs.empty()) {
            e["lhs"] = idv.lhs;
            e["rhs"] = idv.rhs;
        }
        arr.push_back(std::move(e));
    }
    Json j;
    j["all_ok"] = rep.all_ok;
    j["identities"] = std::move(arr);
    return j;
}

Json sum_audit_to_json(const SumAudit& audit) {
    Json j;
    j["mode"] = audit.mode;
    j["subsets_examined"] = audit.subsets_examined;
    j["collisions_found"] = audit.collisions_found;
    j["distinct_sums"] = audit.distinct_sums;
    j["pairs_sampled"] = audit.pairs_sampled;
    j["seed"] = audit.seed;
    return j;
}

SumAudit sum_audit_from_json(const Json& j) {
    SumAudit audit;
    audit.mode = require<std::string>(j, "mode");
    audit.subsets_examined = require<uint64_t>(j, "subsets_examined");
    audit.collisions_found = require<uint64_t>(j, "collisions_found");
    audit.distinct_sums = require<uint64_t>(j, "distinct_sums");
    audit.pairs_sampled = require<uint64_t>(j, "pairs_sampled");
    audit.seed = require<uint64_t>(j, "seed");
    return audit;
}

Json cx_to_json(const Counterexample& cx) {
    Json j;
    j["format_version"] = kCxFormatVersion;
    j["tool_version"] = kVersion;
    j["seed"] = cx.seed;
    j["params"] = params_to_json(cx.params);

    Json search;
    search["mode"] = cx.search_log.mode;
    search["seed"] = cx.search_log.seed;
    search["candidates_tried"] = cx.search_log.candidates_tried;
    search["primes_tested"] = cx.search_log.primes_tested;
    search["audits_run"] = cx.search_log.audits_run;
    search["range_lo"] = bigint_str(cx.search_log.range_lo);
    search["range_hi"] = bigint_str(cx.search_log.range_hi);
    search["assume_4s_ge_n3"] = cx.search_log.assume_4s_ge_n3;
    j["prime"] = Json{{"p", bigint_str(cx.p)}, {"search", std::move(search)}};

    j["field"] = Json{{"omega", bigint_str(cx.omega)}, {"xi", bigint_str(cx.xi)}};
    j["sum_audit"] = sum_audit_to_json(cx.audit);
    j["z_sign_convention"] = "z = -lambda; witness codeword is -R";

    Json wits = Json::array();
    for (const auto& w : cx.witnesses) {
        Json e;
        e["exponents"] = w.exponents;
        e["z"] = bigint_str(w.z);
        Json coeffs = Json::array();
        for (const auto& c : w.codeword.coeffs) coeffs.push_back(bigint_str(c));
        e["codeword"] = std::move(coeffs);
        if (auto runs = compress_agreement(w.agreement, cx.params.s); runs.has_value())
            e["agreement_runs"] = std::move(*runs);
        else
            e["agreement"] = w.agreement;
        e["claimed_delta"] = ratio_str(w.claimed_delta);
        wits.push_back(std::move(e));
    }
    j["witnesses"] = std::move(wits);
    j["z_count"] = cx.z_count;

    Json cert;
    cert["g_degree"] = cx.cert.g_degree;
    cert["max_joint_agreement_bound"] = cx.cert.max_joint_agreement_bound;
    cert["required_agreement"] = cx.cert.required_agreement;
    cert["joint_distance_lower_bound"] = ratio_str(cx.cert.joint_distance_lower_bound);
    j["certificate"] = std::move(cert);
    return j;
}

Counterexample cx_from_json(const Json& j) {
    const std::string version = require<std::string>(j, "format_version");
    if (version != kCxFormatVersion) throw_format("unknown format_version '" + version + "'");

    Counterexample cx;
    cx.seed = require<uint64_t>(j, "seed");
    if (!j.contains("params")) throw_format("missing field 'params'");
    cx.params = params_from_json(j.at("params"));

    if (!j.contains("prime") || !j.at("prime").is_object()) throw_format("missing field 'prime'");
    const Json& prime = j.at("prime");
    cx.p = require_bigint(prime, "p");
    if (!prime.contains("search")) throw_format("missing field 'prime.search'");
    const Json& search = prime.at("search");
    cx.search_log.mode = require<std::string>(search, "mode");
    cx.search_log.seed = require<uint64_t>(search, "seed");
    cx.search_log.candidates_tried = require<uint64_t>(search, "candidates_tried");
    cx.search_log.primes_tested = require<uint64_t>(search, "primes_tested");
    cx.search_log.audits_run = require<uint64_t>(search, "audits_run");
    cx.search_log.range_lo = require_bigint(search, "range_lo");
    cx.search_log.range_hi = require_bigint(search, "range_hi");
    cx.search_log.assume_4s_ge_n3 = require<bool>(search, "assume_4s_ge_n3");

    if (!j.contains("field")) throw_format("missing field 'field'");
    cx.omega = require_bigint(j.at("field"), "omega");
    cx.xi = require_bigint(j.at("field"), "xi");

    if (!j.contains("sum_audit")) throw_format("missing field 'sum_audit'");
    cx.audit = sum_audit_from_json(j.at("sum_audit"));

    if (!j.contains("witnesses") || !j.at("witnesses").is_array())
        throw_format("missing field 'witnesses'");
    for (const auto& e : j.at("witnesses")) {
        AgreementWitness w;
        try {
            w.exponents = e.at("exponents").get<std::vector<uint32_t>>();
        } catch (const nlohmann::json::exception&) {
            throw_format("bad witness exponents");
        }
        w.z = require_bigint(e, "z");
        if (!e.contains("codeword") || !e.at("codeword").is_array())
            throw_format("missing witness codeword");
        std::vector<BigInt> coeffs;
        for (const auto& c : e.at("codeword")) coeffs.push_back(bigint_parse(c.get<std::string>()));
        w.codeword = DensePoly{std::move(coeffs)};
        if (e.contains("agreement_runs"))
            w.agreement = expand_agreement(e.at("agreement_runs"));
        else if (e.contains("agreement"))
            w.agreement = e.at("agreement").get<std::vector<uint32_t>>();
        else
            throw_format("witness missing agreement set");
        w.claimed_delta = require_ratio(e, "claimed_delta");
        cx.witnesses.push_back(std::move(w));
    }
    cx.z_count = require<uint64_t>(j, "z_count");

    if (!j.contains("certificate")) throw_format("missing field 'certificate'");
    const Json& cert = j.at("certificate");
    cx.cert.g_degree = require<uint64_t>(cert, "g_degree");
    cx.cert.max_joint_agreement_bound = require<uint64_t>(cert, "max_joint_agreement_bound");
    cx.cert.required_agreement = require<uint64_t>(cert, "required_agreement");
    cx.cert.joint_distance_lower_bound = require_ratio(cert, "joint_distance_lower_bound");
    return cx;
}

std::string cx_serialize(const Counterexample& cx) { return cx_to_json(cx).dump() + "\n"; }

Counterexample cx_parse(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_format(std::string("not valid JSON: ") + e.what());
    }
    return cx_from_json(j);
}

Json report_to_json(const VerificationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = c.status;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    Json j;
    j["level"] = rep.level;
    j["overall_pass"] = rep.overall_pass;
    j["checks"] = std::move(checks);
    return j;
}

Json sum_count_verdict_to_json(const SumCountVerdict& v) {
    Json j;
    j["pass"] = v.pass;
    j["lower_bound_applicable"] = v.lower_bound_applicable;
    j["distinct_sums"] = v.distinct_sums;
    j["lower_bound_ceil"] = bigint_str(v.lower_bound_ceil);
    j["z_target_ceil"] = bigint_str(v.z_target_ceil);
    j["z_collected"] = v.z_collected;
    j["detail"] = v.detail;
    return j;
}

Json resultant_audit_to_json(const ResultantBoundAudit& audit) {
    Json j;
    j["s"] = audit.s;
    j["r"] = audit.r;
    j["mode"] = audit.mode;
    j["pairs_examined"] = audit.pairs_examined;
    j["violations"] = audit.violations;
    j["zero_resultants"] = audit.zero_resultants;
    j["crosschecked"] = audit.crosschecked;
    j["bound"] = bigint_str(audit.bound);
    j["max_abs_resultant"] = bigint_str(audit.max_abs_resultant);
    j["max_ratio"] = audit.max_ratio;
    j["pass"] = audit.pass;
    return j;
}

Json bad_prime_audit_to_json(const BadPrimeAudit& audit) {
    Json j;
    j["s"] = audit.s;
    j["r"] = audit.r;
    j["bound"] = bigint_str(audit.bound);
    j["b_limit"] = audit.b_limit;
    j["pairs_examined"] = audit.pairs_examined;
    j["degenerate_pairs"] = audit.degenerate_pairs;
    j["max_bad_primes"] = audit.max_bad_primes;
    j["all_within_limit"] = audit.all_within_limit;
    j["all_confirmed"] = audit.all_confirmed;
    Json recs = Json::array();
    for (const auto& rec : audit.records) {
        Json e;
        e["I"] = rec.pair.I;
        e["J"] = rec.pair.J;
        e["resultant"] = bigint_str(rec.res_value);
        if (rec.degenerate) {
            e["status"] = "degenerate: identically colliding";
        } else {
            Json bad = Json::array();
            for (const auto& p : rec.bad_primes) bad.push_back(bigint_str(p));
            e["bad_primes"] = std::move(bad);
            e["collisions_confirmed"] = rec.collisions_confirmed;
        }
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

Json t_bound_report_to_json(const TBoundReport& rep) {
    Json j;
    j["s"] = rep.s;
    j["n"] = rep.n;
    j["desk_checkable"] = rep.desk_checkable;
    j["note"] = rep.note;
    j["interval_lo"] = bigint_str(rep.interval_lo);
    j["interval_hi"] = bigint_str(rep.interval_hi);
    if (rep.desk_checkable) {
        j["T"] = rep.T;
        j["lower_bound"] = rep.lower_bound;
        j["bound_held"] = rep.bound_held;
    }
    return j;
}

}  // namespace rsgap
