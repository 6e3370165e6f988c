#include "rcweyl/ratfunc.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace rcweyl {

RatFunc::RatFunc(PPoly num, PPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.ctx() || !den_.ctx() || !(*num_.ctx() == *den_.ctx()))
        throw std::invalid_argument("RatFunc: mixing parameter contexts");
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc::RatFunc(PPoly num)
    : num_(std::move(num)), den_(PPoly::constant(num_.ctx(), BigRat(1))) {}

RatFunc RatFunc::param(ParamCtxPtr ctx, const std::string& name) {
    auto i = ctx->index_of(name);
    if (!i) throw std::invalid_argument("RatFunc::param: unknown parameter '" + name + "'");
    return param(std::move(ctx), *i);
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = PPoly::constant(num_.ctx(), BigRat(1));
        return;
    }
    PPoly g = ppoly_gcd(num_, den_);
    if (!g.is_constant()) {
        auto qn = num_.divide_exact(g);
        auto qd = den_.divide_exact(g);
        if (!qn || !qd) throw std::logic_error("RatFunc: gcd does not divide");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    BigRat lc = den_.lead_coeff();
    if (!lc.is_one()) {
        BigRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == den_; }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = RatFunc::constant(ctx(), BigRat(1));
    RatFunc base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
    int c = PPoly::compare(a.num_, b.num_);
    if (c) return c;
    return PPoly::compare(a.den_, b.den_);
}

BigRat RatFunc::evaluate(const std::vector<BigRat>& values) const {
    BigRat d = den_.evaluate(values);
    if (d.is_zero())
        throw std::domain_error("RatFunc::evaluate: denominator vanishes at the given point");
    return num_.evaluate(values) / d;
}

std::string RatFunc::str() const {
    // Scale so both parts carry integer coefficients with overall content one;
    // the denominator keeps a positive leading coefficient.
    BigRat fn, fd;
    PPoly pn = num_.primitive(&fn);
    PPoly pd = den_.primitive(&fd);
    if (is_zero()) return "0";
    BigRat ratio = fn / fd;  // num/den == ratio * pn/pd with ratio rational
    pn = pn.scaled(BigRat(ratio.num()));
    pd = pd.scaled(BigRat(ratio.den()));
    if (pd.lead_coeff().sign() < 0) {
        pn = -pn;
        pd = -pd;
    }
    if (pd.is_constant() && pd.constant_value().is_one()) return pn.str();
    return "(" + pn.str() + ")/(" + pd.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

namespace {

// Recursive-descent parser for +, -, *, /, ^, parentheses, integers, parameters.
class Parser {
public:
    Parser(ParamCtxPtr ctx, const std::string& s) : ctx_(std::move(ctx)), s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("RatFunc::parse: " + what + " at position " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr() {
        bool neg = false;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        RatFunc acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                acc += term();
            } else if (c == '-') {
                eat('-');
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                eat('*');
                acc *= factor();
            } else if (c == '/') {
                eat('/');
                acc /= factor();
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (peek() == '^') {
            eat('^');
            bool neg = eat('-');
            long e = integer();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            eat('-');
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(s_.substr(start, pos_ - start), 10);
            return RatFunc::constant(ctx_, BigRat(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '\''))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto i = ctx_->index_of(name);
            if (!i) fail("unknown parameter '" + name + "'");
            return RatFunc::param(ctx_, *i);
        }
        fail("unexpected character");
    }

    ParamCtxPtr ctx_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(ParamCtxPtr ctx, const std::string& text) {
    return Parser(std::move(ctx), text).parse();
}

}  // namespace rcweyl
