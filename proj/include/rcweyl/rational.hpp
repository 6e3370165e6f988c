#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rcweyl {

// Arbitrary-precision rational, canonical form: gcd(|num|,den)=1, den>0, zero is 0/1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }
    explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit BigRat(const mpz_class& z) : v_(z) {}

    // Accepts "n", "n/d", with optional sign.
    static BigRat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }

    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }
    BigRat inverse() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        return BigRat(mpq_class(1) / v_);
    }
    BigRat pow(unsigned e) const;

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

private:
    mpq_class v_;
};

BigRat factorial(unsigned n);
BigRat binomial(long n, long k);

// Falling factorial n(n-1)...(n-k+1).
BigRat falling(long n, unsigned k);

mpz_class gcd_z(const mpz_class& a, const mpz_class& b);
mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

}  // namespace rcweyl
