#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rcweyl/param_poly.hpp"

namespace rcweyl {

// Exact rational function in the declared parameters. Canonical form:
// numerator/denominator coprime, denominator monic in grlex order, zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(ParamCtxPtr ctx)
        : num_(PPoly(ctx)), den_(PPoly::constant(ctx, BigRat(1))) {}
    RatFunc(PPoly num, PPoly den);
    explicit RatFunc(PPoly num);

    static RatFunc constant(ParamCtxPtr ctx, const BigRat& c) {
        return RatFunc(PPoly::constant(ctx, c));
    }
    static RatFunc integer(ParamCtxPtr ctx, long n) {
        return constant(std::move(ctx), BigRat(n));
    }
    static RatFunc param(ParamCtxPtr ctx, std::size_t i) {
        return RatFunc(PPoly::param(std::move(ctx), i));
    }
    static RatFunc param(ParamCtxPtr ctx, const std::string& name);

    const ParamCtxPtr& ctx() const { return num_.ctx(); }
    const PPoly& num() const { return num_; }
    const PPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    BigRat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc scaled(const BigRat& c) const {
        return *this * RatFunc::constant(ctx(), c);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    static int compare(const RatFunc& a, const RatFunc& b);

    // Substitutes exact rationals for every parameter; throws std::domain_error
    // if the denominator vanishes at the point.
    BigRat evaluate(const std::vector<BigRat>& values) const;

    // Expanded integer-coefficient form, e.g. "(2*l^2 - 2)/(l + 3)".
    std::string str() const;
    static RatFunc parse(ParamCtxPtr ctx, const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

private:
    void normalize();

    PPoly num_;
    PPoly den_;
};

}  // namespace rcweyl
