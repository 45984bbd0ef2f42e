/*
 * rsgap — C API for forging and verifying near-capacity proximity-gap
 * failure instances for Reed-Solomon codes over prime fields.
 *
 * Conventions:
 *   - every fallible call returns rsgap_status; 0 is success
 *   - objects are opaque handles released with the matching _free call
 *   - results are JSON strings allocated by the library; release them
 *     with rsgap_string_free
 *   - on failure, rsgap_last_error() returns a thread-local message
 */
#ifndef RSGAP_H
#define RSGAP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsgap_status {
    RSGAP_OK = 0,
    RSGAP_ERR_PARAM = 2,   /* constraint violation, named in the message */
    RSGAP_ERR_SEARCH = 3,  /* prime/sum search exhausted */
    RSGAP_ERR_FORMAT = 4,  /* malformed or unknown-version file */
    RSGAP_ERR_VERIFY = 5,  /* verification found failing checks */
    RSGAP_ERR_BUDGET = 6,  /* sieve/oracle/audit budget exceeded */
    RSGAP_ERR_INTERNAL = 7
} rsgap_status;

typedef struct rsgap_params rsgap_params; /* derived parameter tower */
typedef struct rsgap_cx rsgap_cx;         /* counterexample instance */

const char* rsgap_version(void);
const char* rsgap_last_error(void);
void rsgap_string_free(char* s);

/* ---- parameter tower -------------------------------------------------- */

/* c_rational: "num" or "num/den". profile: "strict" or "desk".
 * m_override: required for desk (power of two), must be 0 for strict. */
rsgap_status rsgap_params_derive(const char* c_rational, uint64_t u, uint32_t v, uint32_t alpha,
                                 const char* profile, uint64_t m_override, rsgap_params** out);
rsgap_status rsgap_params_from_json(const char* json, rsgap_params** out);
/* params plus the exact identity verdicts */
rsgap_status rsgap_params_to_json(const rsgap_params* ps, char** json_out);
void rsgap_params_free(rsgap_params* ps);

/* ---- forging ----------------------------------------------------------- */

typedef struct rsgap_forge_options {
    uint64_t seed;
    uint64_t max_candidates;         /* 0 = default 100000 */
    uint64_t audit_exhaustive_budget; /* 0 = default 1e6 subsets */
    uint64_t audit_sample_pairs;      /* 0 = default 1e6 pairs */
    uint64_t witness_budget;          /* 0 = default 4096 */
    uint32_t threads;                 /* 0 = auto */
    uint32_t mr_rounds;               /* 0 = default 64 */
    int sequential_scan;              /* nonzero: scan t upward instead of sampling */
    const char* fixed_prime;          /* decimal string test hook, NULL for search */
} rsgap_forge_options;

rsgap_status rsgap_forge(const rsgap_params* ps, const rsgap_forge_options* opts, rsgap_cx** out);
rsgap_status rsgap_cx_to_json(const rsgap_cx* cx, char** json_out);
rsgap_status rsgap_cx_from_json(const char* json, rsgap_cx** out);
void rsgap_cx_free(rsgap_cx* cx);

/* ---- verification ------------------------------------------------------ */

/* level: "witness", "exhaustive" or "oracle". Writes the full report JSON;
 * *all_pass is 1 iff every check passed. Returns RSGAP_OK even when checks
 * fail — the report is the result. */
rsgap_status rsgap_verify(const rsgap_cx* cx, const char* level, uint64_t oracle_budget,
                          uint32_t threads, char** report_json, int* all_pass);

/* ---- audits ------------------------------------------------------------ */

/* Distinctness of r-subset sums of the half power basis in F_p; p decimal. */
rsgap_status rsgap_audit_sums(uint32_t s, uint32_t r, const char* p_decimal,
                              uint64_t exhaustive_budget, uint64_t sample_pairs, uint64_t seed,
                              char** report_json);
/* |Res(Phi_s, Q)| <= (2r)^(s/2) over distinct subset pairs. */
rsgap_status rsgap_audit_resultant(uint32_t s, uint32_t r, uint64_t samples, uint64_t seed,
                                   uint64_t exhaustive_budget, char** report_json);
/* Bad primes in [4^s, 8^s] per pair: count bound and collision confirmation. */
rsgap_status rsgap_audit_bad_primes(uint32_t s, uint32_t r, uint64_t pairs, uint64_t seed,
                                    char** report_json);
/* Chebyshev theta and psi at x over the class a mod n. */
rsgap_status rsgap_audit_theta(uint64_t x, uint64_t n, uint64_t a, uint64_t sieve_limit,
                               char** report_json);
/* Exact prime count T in [4^s, 8^s] vs the asymptotic lower-bound value. */
rsgap_status rsgap_audit_t_bound(uint32_t s, uint64_t n, uint64_t sieve_budget, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* RSGAP_H */
