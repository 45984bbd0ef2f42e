#include "rsgap/rscode.hpp"

#include "rsgap/error.hpp"

namespace rsgap {

namespace {

// Walks all codeword coefficient vectors (odometer in base p) and reports
// the agreement count of each with w. Kept deliberately naive.
template <typename Visit>
void enumerate_codewords(const CodeDesc& code, const EvalTable& w, uint64_t budget, Visit&& visit) {
    const FieldCtx& ctx = code.ctx;
    const uint64_t n = ctx.n();
    if (w.values.size() != n) throw_param("oracle: table length != n");

    BigInt count(1);
    for (uint64_t i = 0; i <= code.max_degree; ++i) {
        count *= ctx.p();
        if (count > budget) throw_budget("oracle: p^(k+1) exceeds brute-force budget");
    }

    std::vector<BigInt> coeffs(code.max_degree + 1, BigInt(0));
    for (;;) {
        uint64_t agree = 0;
        for (uint64_t t = 0; t < n; ++t) {
            const BigInt& x = ctx.omega_pow(t);
            BigInt acc(0);
            for (size_t i = coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), coeffs[i]);
            if (acc == w.values[t]) ++agree;
        }
        visit(agree);
        size_t pos = 0;
        while (pos < coeffs.size()) {
            coeffs[pos] += 1;
            if (coeffs[pos] < ctx.p()) break;
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == coeffs.size()) return;
    }
}

}  // namespace

bool is_codeword(const CodeDesc& code, const EvalTable& w) {
    if (w.values.size() != code.ctx.n()) throw_param("is_codeword: table length != n");
    const DensePoly f = ntt_interpolate(code.ctx, w);
    return f.degree() <= int64_t(code.max_degree);
}

WitnessCheck check_agreement_witness(const CodeDesc& code, const EvalTable& word,
                                     const AgreementWitness& wit, uint64_t required_agreement) {
    WitnessCheck out;
    const uint64_t n = code.ctx.n();
    out.agreement_count = wit.agreement.size();
    out.distance_bound = Ratio(BigInt(n - std::min<uint64_t>(n, wit.agreement.size())), BigInt(n));

    if (wit.codeword.degree() > int64_t(code.max_degree)) {
        out.failure = "codeword degree " + std::to_string(wit.codeword.degree()) +
                      " exceeds k = " + std::to_string(code.max_degree);
        return out;
    }
    if (wit.agreement.size() < required_agreement) {
        out.failure = "insufficient agreement set: " + std::to_string(wit.agreement.size()) +
                      " < " + std::to_string(required_agreement);
        return out;
    }
    uint32_t prev = 0;
    bool first = true;
    for (uint32_t t : wit.agreement) {
        if (t >= n) {
            out.failure = "agreement index " + std::to_string(t) + " out of range";
            return out;
        }
        if (!first && t <= prev) {
            out.failure = "agreement indices not strictly increasing at " + std::to_string(t);
            return out;
        }
        prev = t;
        first = false;
    }

    // codeword value table via one transform, then pointwise comparison
    const EvalTable cw = ntt_evaluate(code.ctx, wit.codeword);
    for (uint32_t t : wit.agreement) {
        if (word.values[t] != cw.values[t]) {
            out.failure = "disagreement at domain index " + std::to_string(t);
            return out;
        }
    }
    out.pass = true;
    return out;
}

NoCorrelatedAgreementCert no_correlated_agreement_cert(const CodeDesc& code, uint64_t r, uint64_t m) {
    const uint64_t n = code.ctx.n();
    if (r < 1 || r * m > n) throw_param("certificate: r*m out of range");
    if ((r - 1) * m <= code.max_degree)
        throw_param("certificate: (r-1)m <= k, the root-count argument needs (r-1)m > k");
    NoCorrelatedAgreementCert cert;
    cert.g_degree = (r - 1) * m;
    cert.max_joint_agreement_bound = (r - 1) * m;
    cert.required_agreement = r * m;
    cert.joint_distance_lower_bound = Ratio(BigInt(n - cert.max_joint_agreement_bound), BigInt(n));
    return cert;
}

Ratio distance_to_code_bruteforce(const CodeDesc& code, const EvalTable& w, uint64_t budget) {
    uint64_t best = 0;
    enumerate_codewords(code, w, budget, [&](uint64_t agree) { best = std::max(best, agree); });
    return Ratio(BigInt(code.ctx.n() - best), BigInt(code.ctx.n()));
}

uint64_t max_agreement_bruteforce(const CodeDesc& code, const EvalTable& w, uint64_t budget) {
    uint64_t best = 0;
    enumerate_codewords(code, w, budget, [&](uint64_t agree) { best = std::max(best, agree); });
    return best;
}

}  // namespace rsgap
