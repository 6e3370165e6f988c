#pragma once

#include "rcweyl/poly.hpp"

namespace rcweyl {

enum class OrthoFamily { jacobi, gegenbauer };

// Jacobi or Gegenbauer polynomial with formal parameters; coefficients are the
// exact closed-form sums with every Gamma-ratio expanded as a rising factorial.
struct OrthoPoly {
    OrthoFamily family;
    unsigned degree;
    std::vector<RatFunc> parameters;  // (alpha, beta) or (alpha)
    Poly coeffs;                      // polynomial in one variable t

    std::string latex() const;
    std::string json() const;
};

// Rising factorial (x)_k = x (x+1) ... (x+k-1) over the parameter field.
RatFunc rising(const RatFunc& x, unsigned k);

// P_l^{alpha,beta}(t) on the supplied one-variable context.
OrthoPoly jacobi(unsigned l, const RatFunc& alpha, const RatFunc& beta, VarCtxPtr tvar);

// C_l^{alpha}(t).
OrthoPoly gegenbauer(unsigned l, const RatFunc& alpha, VarCtxPtr tvar);

// Two-variable inflation: Gegenbauer x^{l/2} C(y/sqrt x), Jacobi y^l P(2x/y+1);
// both expand to genuine polynomials in (x, y).
Poly inflate(const OrthoPoly& p, VarCtxPtr xyvars);

enum class OdeKind { gegenbauer, jacobi, de3, de2, de1 };

struct OdeParams {
    // gegenbauer: l=degree, alpha
    // jacobi: l=degree, alpha, beta
    // de3: a=degree, lambda, n
    // de2: a=degree, lambda, n
    // de1: a=degree, a1, a2
    unsigned degree = 0;
    std::optional<RatFunc> alpha, beta, lambda, a1, a2;
    int n = 0;
};

// Left-hand side of the selected equation applied to g, expanded; the zero
// polynomial exactly when g solves it. de3 and de1 act in the s variable
// reached by the documented change of variable, de2 and the classical kinds in t.
Poly ode_residual(OdeKind kind, const OdeParams& params, const Poly& g);

// The selected equation as a one-variable operator on g's context.
class WeylOp;
WeylOp ode_operator(OdeKind kind, const OdeParams& params, VarCtxPtr tvar, ParamCtxPtr pctx);

}  // namespace rcweyl
