// Reed-Solomon code descriptor (evaluations of degree <= k polynomials on
// <omega>), agreement-witness verification, exact tiny-scale distance
// oracles, and the no-correlated-agreement certificate.
#pragma once

#include "rsgap/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rsgap {

struct CodeDesc {
    const FieldCtx& ctx;
    uint64_t max_degree;  // k < n; dimension k+1
};

// Certifies distance(word, code) <= claimed_delta: a degree <= k polynomial
// plus the domain indices where the word provably equals it.
struct AgreementWitness {
    std::vector<uint32_t> exponents;  // xi exponents of the cosets used
    BigInt z;
    DensePoly codeword;
    std::vector<uint32_t> agreement;  // strictly increasing domain indices
    Ratio claimed_delta;
};

struct WitnessCheck {
    bool pass = false;
    std::string failure;          // names the first offending check/index
    uint64_t agreement_count = 0;
    Ratio distance_bound;         // 1 - agreement/n
};

// For any degree <= k codeword q, q - X^((r-1)m) is nonzero of degree
// (r-1)m, so the monomial g agrees with q on at most (r-1)m points; any
// correlated-agreement subdomain would need rm > (r-1)m of them.
struct NoCorrelatedAgreementCert {
    uint64_t g_degree = 0;                   // (r-1)m
    uint64_t max_joint_agreement_bound = 0;  // (r-1)m
    uint64_t required_agreement = 0;         // rm
    Ratio joint_distance_lower_bound;        // 1 - (r-1)m/n
};

bool is_codeword(const CodeDesc& code, const EvalTable& w);

// Verifies degree, agreement-set size >= required_agreement, and pointwise
// equality word = codeword on every listed index.
WitnessCheck check_agreement_witness(const CodeDesc& code, const EvalTable& word,
                                     const AgreementWitness& wit, uint64_t required_agreement);

NoCorrelatedAgreementCert no_correlated_agreement_cert(const CodeDesc& code, uint64_t r, uint64_t m);

// Exact oracles by enumeration of all p^(k+1) codewords; they evaluate with
// plain Horner so they share nothing with the NTT path they cross-check.
// Guard: p^(k+1) <= budget, else budget_exceeded.
Ratio distance_to_code_bruteforce(const CodeDesc& code, const EvalTable& w, uint64_t budget = 10'000'000);
uint64_t max_agreement_bruteforce(const CodeDesc& code, const EvalTable& w, uint64_t budget = 10'000'000);

}  // namespace rsgap
