#include "rcweyl/poly.hpp"

#include <numeric>
#include <sstream>

namespace rcweyl {

VarCtxPtr make_vars(std::vector<std::string> names, std::vector<std::string> latex) {
    return std::make_shared<const VarContext>(std::move(names), std::move(latex));
}

VarCtxPtr make_indexed_vars(const std::string& stem, std::size_t n,
                            const std::string& latex_stem) {
    std::vector<std::string> names, latex;
    std::string ls = latex_stem.empty() ? stem : latex_stem;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(stem + "_" + std::to_string(i));
        latex.push_back(ls + "_{" + std::to_string(i) + "}");
    }
    return make_vars(std::move(names), std::move(latex));
}

unsigned mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0u); }

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Poly::Poly(VarCtxPtr vars, ParamCtxPtr params)
    : vars_(std::move(vars)), params_(std::move(params)) {}

Poly Poly::constant(VarCtxPtr vars, const RatFunc& c) {
    Poly p(std::move(vars), c.ctx());
    if (!c.is_zero()) p.terms_.emplace(Mono(p.vars_->size(), 0), c);
    return p;
}

Poly Poly::variable(VarCtxPtr vars, ParamCtxPtr params, std::size_t i) {
    Poly p(std::move(vars), params);
    if (i >= p.vars_->size()) throw std::invalid_argument("Poly::variable: index out of range");
    Mono m(p.vars_->size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), RatFunc::constant(params, BigRat(1)));
    return p;
}

Poly Poly::monomial(VarCtxPtr vars, const Mono& m, const RatFunc& c) {
    Poly p(std::move(vars), c.ctx());
    if (m.size() != p.vars_->size())
        throw std::invalid_argument("Poly::monomial: exponent length mismatch");
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
}

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
    return d;
}

RatFunc Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc(params_) : it->second;
}

void Poly::set_coeff(const Mono& m, const RatFunc& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Poly::check(const Poly& o) const {
    if (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))
        throw std::invalid_argument("Poly: mixing variable contexts");
}

Poly Poly::operator-() const {
    Poly r(vars_, params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.vars_, a.params_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m = mono_mul(ma, mb);
            RatFunc c = ca * cb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly Poly::scaled(const RatFunc& c) const {
    Poly r(vars_, params_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(vars_, RatFunc::constant(params_, BigRat(1)));
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(vars_, params_);
    for (const auto& [m, c] : terms_) {
        if (!m[var]) continue;
        Mono d = m;
        d[var] -= 1;
        r.terms_.emplace(std::move(d),
                         c * RatFunc::constant(params_, BigRat(static_cast<long>(m[var]))));
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != vars_->size())
        throw std::invalid_argument("Poly::substitute: wrong image count");
    if (images.empty()) throw std::invalid_argument("Poly::substitute: empty context");
    const VarCtxPtr& target = images.front().vars();
    Poly r(target, params_);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= images[i].pow(m[i]);
        r += t;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    check(d);
    if (d.is_zero()) throw std::domain_error("Poly::divide_exact: division by zero");
    Poly rem = *this;
    Poly quot(vars_, params_);
    const Mono& dl = d.terms_.rbegin()->first;
    const RatFunc& dc = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        const Mono& rl = rem.terms_.rbegin()->first;
        Mono q(rl.size());
        for (std::size_t i = 0; i < rl.size(); ++i) {
            if (rl[i] < dl[i]) return std::nullopt;
            q[i] = rl[i] - dl[i];
        }
        Poly qt = Poly::monomial(vars_, q, rem.terms_.rbegin()->second / dc);
        quot += qt;
        rem -= qt * d;
    }
    return quot;
}

std::optional<RatFunc> Poly::proportionality(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return RatFunc(b.params_);
    if (a.terms_.size() != b.terms_.size()) return std::nullopt;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    RatFunc c = ia->second / ib->second;
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        if (ia->second != c * ib->second) return std::nullopt;
    }
    return c;
}

Poly Poly::primitive_scaled() const {
    if (is_zero()) return *this;
    // Clear parameter-polynomial denominators, then remove the common factor.
    PPoly lcm = PPoly::constant(params_, BigRat(1));
    for (const auto& [m, c] : terms_) {
        PPoly g = ppoly_gcd(lcm, c.den());
        lcm = *(lcm * c.den()).divide_exact(g);
    }
    Poly cleared = scaled(RatFunc(lcm));
    PPoly content(params_);
    for (const auto& [m, c] : cleared.terms_) {
        if (!c.is_polynomial()) throw std::logic_error("primitive_scaled: clearing failed");
        content = ppoly_gcd(content, c.num());
    }
    Poly r = cleared.scaled(RatFunc(content).inverse());
    const RatFunc& lead = r.terms_.rbegin()->second;
    if (lead.num().lead_coeff().sign() < 0) r = -r;
    // Integer-primitive rescale of the remaining rational content.
    mpz_class den(1), num(0);
    for (const auto& [m, c] : r.terms_) {
        for (const auto& [e, q] : c.num().terms()) {
            den = lcm_z(den, q.den());
            num = gcd_z(num, q.num());
        }
    }
    if (num == 0) num = 1;
    return r.scaled(RatFunc::constant(params_, BigRat(mpq_class(den, num))));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        bool has_var = mono_degree(m) > 0;
        std::string cs = c.str();
        if (!has_var) {
            os << cs;
        } else {
            bool printed = false;
            if (cs != "1") {
                bool simple = cs.find_first_of("+-*/ ") == std::string::npos || cs[0] == '(';
                os << (simple ? cs : "(" + cs + ")");
                printed = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (printed) os << "*";
                os << vars_->name(i);
                if (m[i] > 1) os << "^" << m[i];
                printed = true;
            }
        }
        first = false;
    }
    return os.str();
}

std::string Poly::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        std::string cs = c.str();
        bool has_var = mono_degree(m) > 0;
        if (!has_var || cs != "1") {
            bool simple = cs.find_first_of("+- ") == std::string::npos;
            os << (simple ? cs : "\\left(" + cs + "\\right)");
            if (has_var) os << "\\,";
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            os << vars_->latex(i);
            if (m[i] > 1) os << "^{" << m[i] << "}";
        }
        first = false;
    }
    return os.str();
}

}  // namespace rcweyl
