// Dense polynomials over F_p, radix-2 NTT on <omega>, and the coset-product
// expansion that yields near-codeword witnesses.
#pragma once

#include "rsgap/modmath.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rsgap {

// coeffs[i] is the coefficient of X^i; trailing zeros trimmed, zero poly empty.
struct DensePoly {
    std::vector<BigInt> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int64_t degree() const { return int64_t(coeffs.size()) - 1; }
    const BigInt& coeff(size_t i) const;  // 0 beyond stored size
};

// Values on the domain <omega>: values[t] = w(omega^t), length exactly n.
struct EvalTable {
    std::vector<BigInt> values;
};

DensePoly poly_trim(std::vector<BigInt> coeffs);
DensePoly poly_add(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
DensePoly poly_neg(const FieldCtx& ctx, const DensePoly& a);
DensePoly poly_mul(const FieldCtx& ctx, const DensePoly& a, const DensePoly& b);
BigInt poly_eval(const FieldCtx& ctx, const DensePoly& a, const BigInt& x);  // Horner

EvalTable ntt_evaluate(const FieldCtx& ctx, const DensePoly& f);    // deg f < n
DensePoly ntt_interpolate(const FieldCtx& ctx, const EvalTable& w); // |w| = n

struct CosetProduct {
    BigInt lambda;       // sum of the chosen xi powers (coefficient identity)
    DensePoly remainder; // R with prod = X^(rm) - lambda*X^((r-1)m) + R, deg R <= (r-2)m
};

// Expands prod_j (X^m - xi^(e_j)) for r >= 2 distinct exponents in [0, s).
// Works in Y = X^m; the degree bound on R is asserted, never assumed.
CosetProduct expand_coset_product(const FieldCtx& ctx, std::span<const uint32_t> xi_exponents);

// The line word at parameter z: values (a^(rm) + z*a^((r-1)m)) for a on the
// domain, computed pointwise from the omega power table.
EvalTable eval_monomial_word(const FieldCtx& ctx, uint64_t r, const BigInt& z);

}  // namespace rsgap
