// Bit-exact JSON persistence: big integers as decimal strings, rationals as
// "num/den", agreement sets run-length compressed along their stride-s
// arithmetic progressions.
#pragma once

#include "rsgap/analytic.hpp"
#include "rsgap/forge.hpp"

#include <json.hpp>

#include <string>

namespace rsgap {

using Json = nlohmann::ordered_json;

Json params_to_json(const ParamSet& ps);
ParamSet params_from_json(const Json& j);  // throws format_error on malformed input

Json identity_report_to_json(const IdentityReport& rep);

Json cx_to_json(const Counterexample& cx);
Counterexample cx_from_json(const Json& j);

// canonical byte form: compact dump + trailing newline
std::string cx_serialize(const Counterexample& cx);
Counterexample cx_parse(const std::string& text);

Json report_to_json(const VerificationReport& rep);
Json sum_audit_to_json(const SumAudit& audit);
SumAudit sum_audit_from_json(const Json& j);
Json sum_count_verdict_to_json(const SumCountVerdict& v);
Json resultant_audit_to_json(const ResultantBoundAudit& audit);
Json bad_prime_audit_to_json(const BadPrimeAudit& audit);
Json t_bound_report_to_json(const TBoundReport& rep);

}  // namespace rsgap
