#include "rcweyl/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rcweyl {

ParamCtxPtr make_params(std::vector<std::string> names, std::vector<std::string> latex) {
    return std::make_shared<const ParamContext>(std::move(names), std::move(latex));
}

bool GrlexLess::operator()(const PExp& a, const PExp& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

PPoly PPoly::constant(ParamCtxPtr ctx, const BigRat& c) {
    PPoly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(PExp(p.ctx_->size(), 0), c);
    return p;
}

PPoly PPoly::param(ParamCtxPtr ctx, std::size_t index) {
    PPoly p(std::move(ctx));
    if (index >= p.ctx_->size()) throw std::invalid_argument("PPoly::param: index out of range");
    PExp e(p.ctx_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), BigRat(1));
    return p;
}

bool PPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree() == 0;
}

BigRat PPoly::constant_value() const {
    PExp zero(ctx_ ? ctx_->size() : 0, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? BigRat(0) : it->second;
}

unsigned PPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const PExp& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned PPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

void PPoly::set_term(const PExp& e, const BigRat& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

const PExp& PPoly::lead_exp() const {
    if (terms_.empty()) throw std::domain_error("PPoly::lead_exp: zero polynomial");
    return terms_.rbegin()->first;
}

const BigRat& PPoly::lead_coeff() const {
    if (terms_.empty()) throw std::domain_error("PPoly::lead_coeff: zero polynomial");
    return terms_.rbegin()->second;
}

void PPoly::check_ctx(const PPoly& o) const {
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
        throw std::invalid_argument("PPoly: mixing parameter contexts");
}

PPoly PPoly::operator-() const {
    PPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PPoly& PPoly::operator+=(const PPoly& o) {
    check_ctx(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
    check_ctx(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
    a.check_ctx(b);
    PPoly r(a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            PExp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            BigRat c = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(e), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

PPoly PPoly::scaled(const BigRat& c) const {
    PPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

PPoly PPoly::pow(unsigned e) const {
    PPoly r = constant(ctx_, BigRat(1));
    PPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int PPoly::compare(const PPoly& a, const PPoly& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    GrlexLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second < ib->second) return -1;
        if (ib->second < ia->second) return 1;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

BigRat PPoly::evaluate(const std::vector<BigRat>& values) const {
    if (ctx_ && values.size() != ctx_->size())
        throw std::invalid_argument("PPoly::evaluate: wrong number of values");
    BigRat acc(0);
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= values[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::optional<PPoly> PPoly::divide_exact(const PPoly& d) const {
    check_ctx(d);
    if (d.is_zero()) throw std::domain_error("PPoly::divide_exact: division by zero");
    PPoly rem = *this;
    PPoly quot(ctx_);
    const PExp& dl = d.lead_exp();
    while (!rem.is_zero()) {
        const PExp& rl = rem.lead_exp();
        PExp q(rl.size());
        for (std::size_t i = 0; i < rl.size(); ++i) {
            if (rl[i] < dl[i]) return std::nullopt;
            q[i] = rl[i] - dl[i];
        }
        BigRat qc = rem.lead_coeff() / d.lead_coeff();
        PPoly qt(ctx_);
        qt.terms_.emplace(std::move(q), qc);
        quot += qt;
        rem -= qt * d;
    }
    return quot;
}

PPoly PPoly::primitive(BigRat* factor) const {
    if (is_zero()) {
        if (factor) *factor = BigRat(0);
        return *this;
    }
    mpz_class den(1), num(0);
    for (const auto& [e, c] : terms_) den = lcm_z(den, c.den());
    for (const auto& [e, c] : terms_) num = gcd_z(num, c.num() * (den / c.den()));
    BigRat scale = BigRat(mpq_class(den, num));
    PPoly r = scaled(scale);
    if (r.lead_coeff().sign() < 0) {
        r = -r;
        scale = -scale;
    }
    if (factor) *factor = scale.inverse();
    return r;
}

namespace {

// View of a PPoly as a univariate polynomial in variable `v` with PPoly coefficients.
std::vector<PPoly> coeffs_in(const PPoly& p, std::size_t v) {
    std::vector<PPoly> cs(p.is_zero() ? 0 : p.degree_in(v) + 1, PPoly(p.ctx()));
    for (auto& c : cs) c = PPoly(p.ctx());
    for (const auto& [e, c] : p.terms()) {
        PExp r = e;
        unsigned d = r[v];
        r[v] = 0;
        PPoly t(p.ctx());
        t.set_term(r, c);
        cs[d] += t;
    }
    return cs;
}

PPoly from_coeffs(const std::vector<PPoly>& cs, std::size_t v, ParamCtxPtr ctx) {
    PPoly p(ctx);
    for (std::size_t d = 0; d < cs.size(); ++d) {
        for (const auto& [e, c] : cs[d].terms()) {
            PExp r = e;
            r[v] += static_cast<unsigned>(d);
            PPoly t(ctx);
            t.set_term(r, c);
            p += t;
        }
    }
    return p;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a = q*b + prem.
PPoly prem(const PPoly& a, const PPoly& b, std::size_t v) {
    std::vector<PPoly> ra = coeffs_in(a, v);
    std::vector<PPoly> rb = coeffs_in(b, v);
    if (rb.empty()) throw std::domain_error("prem: zero divisor");
    const PPoly& lb = rb.back();
    long da = static_cast<long>(ra.size()) - 1;
    long db = static_cast<long>(rb.size()) - 1;
    while (da >= db && !(ra.size() == 1 && ra[0].is_zero()) && !ra.empty()) {
        PPoly lt = ra.back();
        // ra = lb*ra - lt * x^(da-db) * b
        for (auto& c : ra) c = lb * c;
        for (long i = 0; i <= db; ++i) ra[static_cast<std::size_t>(da - db + i)] -= lt * rb[static_cast<std::size_t>(i)];
        while (!ra.empty() && ra.back().is_zero()) ra.pop_back();
        da = static_cast<long>(ra.size()) - 1;
    }
    return from_coeffs(ra, v, a.ctx());
}

// GCD of the univariate coefficients of p in v (the content w.r.t. v).
PPoly content_in(const PPoly& p, std::size_t v) {
    auto cs = coeffs_in(p, v);
    PPoly g(p.ctx());
    for (const auto& c : cs) g = ppoly_gcd(g, c);
    return g;
}

}  // namespace

PPoly ppoly_gcd(const PPoly& a, const PPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant())
        return PPoly::constant(a.ctx(), BigRat(1));

    // Main variable: lowest index appearing in either operand.
    std::size_t v = 0;
    while (a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // One side is free of v: gcd divides its content in v.
        const PPoly& flat = a.degree_in(v) == 0 ? a : b;
        const PPoly& other = a.degree_in(v) == 0 ? b : a;
        return ppoly_gcd(flat, content_in(other, v));
    }

    PPoly ca = content_in(a, v);
    PPoly cb = content_in(b, v);
    PPoly pa = a.divide_exact(ca)->primitive();
    PPoly pb = b.divide_exact(cb)->primitive();
    PPoly cg = ppoly_gcd(ca, cb);

    // Primitive PRS in v; every remainder is reduced to its fully primitive
    // part (polynomial content and rational content) to keep coefficients small.
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        PPoly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return cg.primitive();
        pa = pb;
        pb = r.divide_exact(content_in(r, v))->primitive();
    }
    PPoly g = pb.divide_exact(content_in(pb, v))->primitive();
    return (cg * g).primitive();
}

std::string PPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRat cc = c;
        if (first) {
            if (cc.sign() < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc.sign() < 0 ? " - " : " + ");
            if (cc.sign() < 0) cc = -cc;
        }
        bool has_var = std::accumulate(e.begin(), e.end(), 0u) > 0;
        if (!has_var) {
            os << cc.str();
        } else {
            bool printed = false;
            if (!cc.is_one()) {
                os << cc.str();
                printed = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (printed) os << "*";
                os << ctx_->name(i);
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace rcweyl
