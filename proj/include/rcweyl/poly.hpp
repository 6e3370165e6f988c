#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rcweyl/ratfunc.hpp"

namespace rcweyl {

// Ordered tuple of polynomial variables (zeta_1, ..., v_1, ...).
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names,
                        std::vector<std::string> latex = {})
        : names_(std::move(names)), latex_(std::move(latex)) {
        if (latex_.empty()) latex_ = names_;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::string& latex(std::size_t i) const { return latex_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> latex_;
};

using VarCtxPtr = std::shared_ptr<const VarContext>;

VarCtxPtr make_vars(std::vector<std::string> names, std::vector<std::string> latex = {});

// Numbered family ("z", n) -> z_1 ... z_n, with subscripted LaTeX names.
VarCtxPtr make_indexed_vars(const std::string& stem, std::size_t n,
                            const std::string& latex_stem = "");

using Mono = std::vector<unsigned>;

unsigned mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);

// Sparse multivariate polynomial over RatFunc in a fixed variable context.
class Poly {
public:
    Poly() = default;
    Poly(VarCtxPtr vars, ParamCtxPtr params);

    static Poly constant(VarCtxPtr vars, const RatFunc& c);
    static Poly variable(VarCtxPtr vars, ParamCtxPtr params, std::size_t i);
    static Poly monomial(VarCtxPtr vars, const Mono& m, const RatFunc& c);

    const VarCtxPtr& vars() const { return vars_; }
    const ParamCtxPtr& params() const { return params_; }
    const std::map<Mono, RatFunc, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    RatFunc coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const RatFunc& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const RatFunc& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(std::size_t var) const;

    // Substitutes the given polynomials (all in a common target context) for the
    // variables of this polynomial.
    Poly substitute(const std::vector<Poly>& images) const;

    // Exact polynomial division; nullopt when not divisible.
    std::optional<Poly> divide_exact(const Poly& d) const;

    // Are a and b equal up to one nonzero RatFunc scalar? Returns the scalar c
    // with a == c*b when it exists.
    static std::optional<RatFunc> proportionality(const Poly& a, const Poly& b);

    // Divides by the gcd of all coefficients (an integer-content style display
    // normalization over the parameter field) and fixes the grlex-leading sign.
    Poly primitive_scaled() const;

    std::string str() const;
    std::string latex() const;

private:
    void check(const Poly& o) const;

    VarCtxPtr vars_;
    ParamCtxPtr params_;
    std::map<Mono, RatFunc, GrlexLess> terms_;
};

}  // namespace rcweyl
