#pragma once

#include "rcweyl/poly.hpp"

namespace rcweyl {

// Key of one normal-ordered term x^alpha d^beta.
struct WeylKey {
    Mono alpha;
    Mono beta;
    friend bool operator==(const WeylKey& a, const WeylKey& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

struct WeylKeyLess {
    bool operator()(const WeylKey& a, const WeylKey& b) const {
        GrlexLess less;
        if (less(a.alpha, b.alpha)) return true;
        if (less(b.alpha, a.alpha)) return false;
        return less(a.beta, b.beta);
    }
};

// Polynomial-coefficient differential operator, stored in normal order
// (multiplications left of derivatives). The unique stored form makes
// equality decidable.
class WeylOp {
public:
    WeylOp() = default;
    WeylOp(VarCtxPtr vars, ParamCtxPtr params);

    static WeylOp zero(VarCtxPtr vars, ParamCtxPtr params) { return WeylOp(vars, params); }
    static WeylOp identity(VarCtxPtr vars, ParamCtxPtr params);
    static WeylOp term(VarCtxPtr vars, const Mono& alpha, const Mono& beta, const RatFunc& c);
    // x_i as a multiplication operator.
    static WeylOp position(VarCtxPtr vars, ParamCtxPtr params, std::size_t i);
    static WeylOp derivative(VarCtxPtr vars, ParamCtxPtr params, std::size_t i);
    // Multiplication by an arbitrary polynomial.
    static WeylOp multiplication(const Poly& p);
    // Euler operator sum_j x_j d_j.
    static WeylOp euler(VarCtxPtr vars, ParamCtxPtr params);

    const VarCtxPtr& vars() const { return vars_; }
    const ParamCtxPtr& params() const { return params_; }
    const std::map<WeylKey, RatFunc, WeylKeyLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Highest |beta| over stored terms.
    unsigned order() const;
    bool has_constant_coefficients() const;
    void set_term(const Mono& alpha, const Mono& beta, const RatFunc& c);
    void add_term(const Mono& alpha, const Mono& beta, const RatFunc& c);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    WeylOp scaled(const RatFunc& c) const;

    friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    std::string str() const;
    std::string latex() const;
    std::string json() const;

private:
    void check(const WeylOp& o) const;

    VarCtxPtr vars_;
    ParamCtxPtr params_;
    std::map<WeylKey, RatFunc, WeylKeyLess> terms_;
};

// d acts as formal partial derivative, x as multiplication.
Poly apply(const WeylOp& op, const Poly& p);

// Normal-ordered product with [d_i, x_j] = delta_ij.
WeylOp compose(const WeylOp& a, const WeylOp& b);

WeylOp commutator(const WeylOp& a, const WeylOp& b);

// Algebraic Fourier transform d_j -> -zeta_j, x_j -> d_zeta_j, extended as an
// algebra homomorphism into the Weyl algebra of the dual context.
WeylOp fourier_hat(const WeylOp& op, VarCtxPtr dual_vars);

// Conjugation by the antipodal substitution x_j -> -x_j, d_j -> -d_j.
WeylOp antipode(const WeylOp& op);

// Symbol of a constant-coefficient operator: d^beta -> zeta^beta. Throws
// std::domain_error on variable coefficients.
Poly symbol(const WeylOp& op, VarCtxPtr dual_vars);

// Constant-coefficient operator with the given symbol.
WeylOp symbol_inverse(const Poly& q, VarCtxPtr primal_vars);

// Algebra homomorphism determined by images of the generators: each term
// x^alpha d^beta maps to prod x_images[i]^alpha_i . prod d_images[i]^beta_i.
// Well defined when the x images commute pairwise, as do the d images.
WeylOp substitute_generators(const WeylOp& op, const std::vector<WeylOp>& x_images,
                             const std::vector<WeylOp>& d_images);

enum class ActionSide { primal, dual };

// Lie algebra homomorphism End(E) -> D(E): primal A -> -sum A_ij x_j d_i,
// dual A -> sum A_ji zeta_j d_i.
WeylOp matrix_action(const std::vector<std::vector<RatFunc>>& a, ActionSide side,
                     VarCtxPtr vars, ParamCtxPtr params);

}  // namespace rcweyl
