// End-to-end pipeline: good-prime search, lambda-set enumeration, witness
// construction, and independent re-verification of serialized instances.
#pragma once

#include "rsgap/params.hpp"
#include "rsgap/rscode.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsgap {

struct ForgeOptions {
    uint64_t seed = 1;
    uint64_t max_candidates = 100'000;
    uint64_t audit_exhaustive_budget = 1'000'000;  // max subset count for the exhaustive audit
    uint64_t audit_sample_pairs = 1'000'000;       // pair draws when sampling
    uint64_t witness_budget = 4096;                // cap on stored witnesses (>= ceil(n^C) in strict)
    unsigned threads = 1;                          // 0 = auto
    bool sequential_scan = false;                  // scan t upward from the range start instead of sampling
    std::optional<BigInt> fixed_prime;             // test hook: bypass the range search
    unsigned mr_rounds = 64;
};

struct SumAudit {
    std::string mode;  // "exhaustive" or "sampled"
    uint64_t subsets_examined = 0;
    uint64_t collisions_found = 0;
    uint64_t distinct_sums = 0;
    uint64_t pairs_sampled = 0;  // sampled mode only
    uint64_t seed = 0;           // RNG seed of the audit itself (replayable)
};

struct PrimeSearchLog {
    uint64_t candidates_tried = 0;
    uint64_t primes_tested = 0;
    uint64_t audits_run = 0;
    uint64_t seed = 0;
    std::string mode;  // "random", "sequential", "fixed"
    BigInt range_lo, range_hi;
    bool assume_4s_ge_n3 = false;  // 4^s >= n^3, validated on strict profiles
};

struct GoodPrime {
    BigInt p;
    BigInt omega, xi;
    SumAudit audit;
    PrimeSearchLog log;
};

// Audits pairwise distinctness of the r-subset sums of {xi^0..xi^(s/2-1)}.
// Exhaustive when C(s/2, r) fits the budget, else `sample_pairs` random
// subset pairs; the mode and seed are recorded for exact replay.
SumAudit run_sum_audit(const FieldCtx& ctx, uint64_t r, uint64_t exhaustive_budget,
                       uint64_t sample_pairs, uint64_t seed);

// Draws p = 1 + n*t in [4^s, min(8^s, n^A)] until a probable prime whose
// sum audit reports zero collisions. A = K ln 8 when the tower defines it.
GoodPrime find_good_prime(const ParamSet& ps, const ForgeOptions& opts);

// Walks r-subsets of [0, s/2) in lexicographic order, keeping those whose
// sums are new, until target_count distinct sums are held.
std::vector<std::pair<std::vector<uint32_t>, BigInt>> enumerate_lambda(const FieldCtx& ctx,
                                                                       uint64_t r,
                                                                       uint64_t target_count);

struct Counterexample {
    ParamSet params;
    BigInt p;
    BigInt omega, xi;
    std::vector<AgreementWitness> witnesses;  // z = -lambda, codeword = -R
    NoCorrelatedAgreementCert cert;
    uint64_t z_count = 0;
    PrimeSearchLog search_log;
    SumAudit audit;
    uint64_t seed = 0;
};

Counterexample build_counterexample(const ParamSet& ps, const ForgeOptions& opts);

enum class VerifyLevel { witness, exhaustive, oracle };

VerifyLevel verify_level_parse(const std::string& s);
std::string verify_level_str(VerifyLevel lvl);

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::witness;
    uint64_t oracle_budget = 10'000'000;
    unsigned mr_rounds = 64;
    unsigned threads = 1;
};

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "waived", "skipped"
    std::string detail;
};

struct VerificationReport {
    std::string level;
    std::vector<CheckResult> checks;
    bool overall_pass = false;  // no "fail" entries
};

// Re-derives the tower, re-tests primality and root orders, re-checks every
// witness from scratch; higher levels replay the sum audit and run the
// brute-force oracles where the budget allows. Failures are report entries,
// never exceptions.
VerificationReport verify_counterexample(const Counterexample& cx, const VerifyOptions& opts);

struct SumCountVerdict {
    bool pass = false;
    bool lower_bound_applicable = false;  // exhaustive audits only
    uint64_t distinct_sums = 0;
    BigInt lower_bound_ceil;  // ceil((s/2r)^r)
    BigInt z_target_ceil;     // ceil(n^C)
    uint64_t z_collected = 0;
    std::string detail;
};

// distinct_sums >= (s/2r)^r (exhaustive mode) and, on strict profiles,
// z_collected >= n^C; comparisons exact via cross-multiplication.
SumCountVerdict audit_sum_count_bound(const ParamSet& ps, const SumAudit& audit, uint64_t z_collected);

}  // namespace rsgap
