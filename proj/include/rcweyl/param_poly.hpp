#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcweyl/rational.hpp"

namespace rcweyl {

// Ordered tuple of formal parameter symbols (lambda, alpha, ...). Declared once
// per computation; values from different contexts never mix.
class ParamContext {
public:
    explicit ParamContext(std::vector<std::string> names,
                          std::vector<std::string> latex = {})
        : names_(std::move(names)), latex_(std::move(latex)) {
        if (latex_.empty()) latex_ = names_;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::string& latex(std::size_t i) const { return latex_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const ParamContext& a, const ParamContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> latex_;
};

using ParamCtxPtr = std::shared_ptr<const ParamContext>;

ParamCtxPtr make_params(std::vector<std::string> names,
                        std::vector<std::string> latex = {});

// Exponent vector, one slot per declared parameter.
using PExp = std::vector<unsigned>;

// Graded lexicographic order: compare total degree first, then exponents.
struct GrlexLess {
    bool operator()(const PExp& a, const PExp& b) const;
};

// Sparse multivariate polynomial in the declared parameters over BigRat.
class PPoly {
public:
    PPoly() = default;
    explicit PPoly(ParamCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static PPoly constant(ParamCtxPtr ctx, const BigRat& c);
    static PPoly param(ParamCtxPtr ctx, std::size_t index);

    const ParamCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; only meaningful together with is_constant().
    BigRat constant_value() const;

    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;

    const std::map<PExp, BigRat, GrlexLess>& terms() const { return terms_; }
    void set_term(const PExp& e, const BigRat& c);

    // Leading (grlex-largest) monomial and coefficient.
    const PExp& lead_exp() const;
    const BigRat& lead_coeff() const;

    PPoly operator-() const;
    PPoly& operator+=(const PPoly& o);
    PPoly& operator-=(const PPoly& o);
    friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
    friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
    friend PPoly operator*(const PPoly& a, const PPoly& b);
    PPoly& operator*=(const PPoly& o) { return *this = *this * o; }
    PPoly scaled(const BigRat& c) const;
    PPoly pow(unsigned e) const;

    friend bool operator==(const PPoly& a, const PPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }
    // Total order for use as map keys; grlex on terms.
    static int compare(const PPoly& a, const PPoly& b);

    BigRat evaluate(const std::vector<BigRat>& values) const;

    // Exact division; nullopt if the division leaves a remainder.
    std::optional<PPoly> divide_exact(const PPoly& d) const;

    // Primitive associate with integer coefficients, grlex-leading one positive;
    // also returns the rational factor c with *this == c * primitive.
    PPoly primitive(BigRat* factor = nullptr) const;

    std::string str() const;

private:
    void check_ctx(const PPoly& o) const;

    ParamCtxPtr ctx_;
    std::map<PExp, BigRat, GrlexLess> terms_;
};

// GCD over Q[params], returned as the canonical primitive associate.
PPoly ppoly_gcd(const PPoly& a, const PPoly& b);

}  // namespace rcweyl
