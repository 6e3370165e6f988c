#include "rcweyl/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace rcweyl {

WeylOp::WeylOp(VarCtxPtr vars, ParamCtxPtr params)
    : vars_(std::move(vars)), params_(std::move(params)) {}

WeylOp WeylOp::identity(VarCtxPtr vars, ParamCtxPtr params) {
    WeylOp op(std::move(vars), params);
    Mono zero(op.vars_->size(), 0);
    op.terms_.emplace(WeylKey{zero, zero}, RatFunc::constant(params, BigRat(1)));
    return op;
}

WeylOp WeylOp::term(VarCtxPtr vars, const Mono& alpha, const Mono& beta, const RatFunc& c) {
    WeylOp op(std::move(vars), c.ctx());
    if (alpha.size() != op.vars_->size() || beta.size() != op.vars_->size())
        throw std::invalid_argument("WeylOp::term: exponent length mismatch");
    if (!c.is_zero()) op.terms_.emplace(WeylKey{alpha, beta}, c);
    return op;
}

WeylOp WeylOp::position(VarCtxPtr vars, ParamCtxPtr params, std::size_t i) {
    Mono a(vars->size(), 0), b(vars->size(), 0);
    a.at(i) = 1;
    return term(std::move(vars), a, b, RatFunc::constant(params, BigRat(1)));
}

WeylOp WeylOp::derivative(VarCtxPtr vars, ParamCtxPtr params, std::size_t i) {
    Mono a(vars->size(), 0), b(vars->size(), 0);
    b.at(i) = 1;
    return term(std::move(vars), a, b, RatFunc::constant(params, BigRat(1)));
}

WeylOp WeylOp::multiplication(const Poly& p) {
    WeylOp op(p.vars(), p.params());
    Mono zero(p.vars()->size(), 0);
    for (const auto& [m, c] : p.terms()) op.terms_.emplace(WeylKey{m, zero}, c);
    return op;
}

WeylOp WeylOp::euler(VarCtxPtr vars, ParamCtxPtr params) {
    WeylOp op(vars, params);
    for (std::size_t i = 0; i < vars->size(); ++i) {
        Mono e(vars->size(), 0);
        e[i] = 1;
        op.terms_.emplace(WeylKey{e, e}, RatFunc::constant(params, BigRat(1)));
    }
    return op;
}

unsigned WeylOp::order() const {
    unsigned r = 0;
    for (const auto& [k, c] : terms_) r = std::max(r, mono_degree(k.beta));
    return r;
}

bool WeylOp::has_constant_coefficients() const {
    for (const auto& [k, c] : terms_)
        if (mono_degree(k.alpha)) return false;
    return true;
}

void WeylOp::set_term(const Mono& alpha, const Mono& beta, const RatFunc& c) {
    WeylKey k{alpha, beta};
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

void WeylOp::add_term(const Mono& alpha, const Mono& beta, const RatFunc& c) {
    if (c.is_zero()) return;
    WeylKey k{alpha, beta};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WeylOp::check(const WeylOp& o) const {
    if (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))
        throw std::invalid_argument("WeylOp: mixing variable contexts");
}

WeylOp WeylOp::operator-() const {
    WeylOp r(vars_, params_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k.alpha, k.beta, -c);
    return *this;
}

WeylOp WeylOp::scaled(const RatFunc& c) const {
    WeylOp r(vars_, params_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Poly apply(const WeylOp& op, const Poly& p) {
    if (!op.vars() || !p.vars() || !(*op.vars() == *p.vars()))
        throw std::invalid_argument("apply: operator/polynomial context mismatch");
    Poly out(p.vars(), p.params());
    for (const auto& [k, c] : op.terms()) {
        for (const auto& [m, pc] : p.terms()) {
            // d^beta on x^m, then multiply by x^alpha.
            BigRat scale(1);
            Mono r = m;
            bool kill = false;
            for (std::size_t i = 0; i < r.size() && !kill; ++i) {
                unsigned b = k.beta[i];
                if (!b) continue;
                if (r[i] < b) {
                    kill = true;
                    break;
                }
                scale *= falling(static_cast<long>(r[i]), b);
                r[i] -= b;
            }
            if (kill) continue;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += k.alpha[i];
            out.set_coeff(r, out.coeff(r) + c * pc * RatFunc::constant(p.params(), scale));
        }
    }
    return out;
}

WeylOp compose(const WeylOp& a, const WeylOp& b) {
    if (!a.vars() || !b.vars() || !(*a.vars() == *b.vars()))
        throw std::invalid_argument("compose: context mismatch");
    const std::size_t n = a.vars()->size();
    WeylOp out(a.vars(), a.params());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // x^alpha d^beta x^gamma d^delta
            //   = sum_k prod_i binom(beta_i,k_i) falling(gamma_i,k_i)
            //     x^(alpha+gamma-k) d^(beta+delta-k)
            Mono kmax(n);
            for (std::size_t i = 0; i < n; ++i) kmax[i] = std::min(ka.beta[i], kb.alpha[i]);
            Mono k(n, 0);
            while (true) {
                BigRat scale(1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (!k[i]) continue;
                    scale *= binomial(static_cast<long>(ka.beta[i]), static_cast<long>(k[i]));
                    scale *= falling(static_cast<long>(kb.alpha[i]), k[i]);
                }
                Mono alpha(n), beta(n);
                for (std::size_t i = 0; i < n; ++i) {
                    alpha[i] = ka.alpha[i] + kb.alpha[i] - k[i];
                    beta[i] = ka.beta[i] + kb.beta[i] - k[i];
                }
                out.add_term(alpha, beta, ca * cb * RatFunc::constant(a.params(), scale));
                // Next multi-index below kmax.
                std::size_t i = 0;
                while (i < n && k[i] == kmax[i]) {
                    k[i] = 0;
                    ++i;
                }
                if (i == n) break;
                ++k[i];
            }
        }
    }
    return out;
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) {
    return compose(a, b) - compose(b, a);
}

WeylOp fourier_hat(const WeylOp& op, VarCtxPtr dual_vars) {
    if (dual_vars->size() != op.vars()->size())
        throw std::invalid_argument("fourier_hat: dual context size mismatch");
    const std::size_t n = dual_vars->size();
    WeylOp out(dual_vars, op.params());
    for (const auto& [k, c] : op.terms()) {
        // x^alpha d^beta -> d_zeta^alpha (-zeta)^beta, then reorder:
        // d^alpha zeta^beta = sum_j binom(alpha,j) falling(beta,j) zeta^(beta-j) d^(alpha-j).
        int sign = mono_degree(k.beta) % 2 ? -1 : 1;
        Mono jmax(n);
        for (std::size_t i = 0; i < n; ++i) jmax[i] = std::min(k.alpha[i], k.beta[i]);
        Mono j(n, 0);
        while (true) {
            BigRat scale(sign);
            for (std::size_t i = 0; i < n; ++i) {
                if (!j[i]) continue;
                scale *= binomial(static_cast<long>(k.alpha[i]), static_cast<long>(j[i]));
                scale *= falling(static_cast<long>(k.beta[i]), j[i]);
            }
            Mono alpha(n), beta(n);
            for (std::size_t i = 0; i < n; ++i) {
                alpha[i] = k.beta[i] - j[i];
                beta[i] = k.alpha[i] - j[i];
            }
            out.add_term(alpha, beta, c * RatFunc::constant(op.params(), scale));
            std::size_t i = 0;
            while (i < n && j[i] == jmax[i]) {
                j[i] = 0;
                ++i;
            }
            if (i == n) break;
            ++j[i];
        }
    }
    return out;
}

WeylOp antipode(const WeylOp& op) {
    WeylOp out(op.vars(), op.params());
    for (const auto& [k, c] : op.terms()) {
        int sign = (mono_degree(k.alpha) + mono_degree(k.beta)) % 2 ? -1 : 1;
        out.add_term(k.alpha, k.beta,
                     sign < 0 ? -c : c);
    }
    return out;
}

Poly symbol(const WeylOp& op, VarCtxPtr dual_vars) {
    if (!op.has_constant_coefficients())
        throw std::domain_error("symbol: operator has variable coefficients");
    if (dual_vars->size() != op.vars()->size())
        throw std::invalid_argument("symbol: dual context size mismatch");
    Poly q(dual_vars, op.params());
    for (const auto& [k, c] : op.terms()) q.set_coeff(k.beta, c);
    return q;
}

WeylOp symbol_inverse(const Poly& q, VarCtxPtr primal_vars) {
    if (primal_vars->size() != q.vars()->size())
        throw std::invalid_argument("symbol_inverse: context size mismatch");
    WeylOp op(primal_vars, q.params());
    Mono zero(primal_vars->size(), 0);
    for (const auto& [m, c] : q.terms()) op.set_term(zero, m, c);
    return op;
}

WeylOp substitute_generators(const WeylOp& op, const std::vector<WeylOp>& x_images,
                             const std::vector<WeylOp>& d_images) {
    const std::size_t n = op.vars()->size();
    if (x_images.size() != n || d_images.size() != n)
        throw std::invalid_argument("substitute_generators: image count mismatch");
    const VarCtxPtr& target = x_images.front().vars();
    WeylOp out(target, op.params());
    for (const auto& [k, c] : op.terms()) {
        WeylOp prod = WeylOp::identity(target, op.params()).scaled(c);
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < k.alpha[i]; ++e) prod = compose(prod, x_images[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < k.beta[i]; ++e) prod = compose(prod, d_images[i]);
        out += prod;
    }
    return out;
}

WeylOp matrix_action(const std::vector<std::vector<RatFunc>>& a, ActionSide side,
                     VarCtxPtr vars, ParamCtxPtr params) {
    const std::size_t n = vars->size();
    if (a.size() != n) throw std::invalid_argument("matrix_action: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix_action: dimension mismatch");
    WeylOp out(vars, params);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Mono alpha(n, 0), beta(n, 0);
            alpha[j] = 1;
            beta[i] = 1;
            if (side == ActionSide::primal)
                out.add_term(alpha, beta, -a[i][j]);  // -sum_ij A_ij x_j d_i
            else
                out.add_term(alpha, beta, a[j][i]);  // +sum_ij A_ji zeta_j d_i
        }
    }
    return out;
}

namespace {

// Emission order: sort by (|beta|, beta, alpha) lexicographically.
std::vector<std::pair<WeylKey, RatFunc>> emission_sorted(const WeylOp& op) {
    std::vector<std::pair<WeylKey, RatFunc>> v(op.terms().begin(), op.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        unsigned da = mono_degree(a.first.beta), db = mono_degree(b.first.beta);
        if (da != db) return da < db;
        if (a.first.beta != b.first.beta) return a.first.beta < b.first.beta;
        return a.first.alpha < b.first.alpha;
    });
    return v;
}

}  // namespace

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : emission_sorted(*this)) {
        if (!first) os << " + ";
        std::string cs = c.str();
        bool has_var = mono_degree(k.alpha) + mono_degree(k.beta) > 0;
        bool printed = false;
        if (!has_var || cs != "1") {
            bool simple = cs.find_first_of("+-*/ ") == std::string::npos || cs[0] == '(';
            os << (simple ? cs : "(" + cs + ")");
            printed = true;
        }
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (!k.alpha[i]) continue;
            if (printed) os << "*";
            os << vars_->name(i);
            if (k.alpha[i] > 1) os << "^" << k.alpha[i];
            printed = true;
        }
        for (std::size_t i = 0; i < k.beta.size(); ++i) {
            if (!k.beta[i]) continue;
            if (printed) os << "*";
            os << "d_" << vars_->name(i);
            if (k.beta[i] > 1) os << "^" << k.beta[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

std::string WeylOp::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : emission_sorted(*this)) {
        if (!first) os << " + ";
        std::string cs = c.str();
        bool has_var = mono_degree(k.alpha) + mono_degree(k.beta) > 0;
        if (!has_var || cs != "1") {
            bool simple = cs.find_first_of("+- ") == std::string::npos;
            os << (simple ? cs : "\\left(" + cs + "\\right)");
            if (has_var) os << "\\,";
        }
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (!k.alpha[i]) continue;
            os << vars_->latex(i);
            if (k.alpha[i] > 1) os << "^{" << k.alpha[i] << "}";
        }
        for (std::size_t i = 0; i < k.beta.size(); ++i) {
            if (!k.beta[i]) continue;
            if (k.beta[i] == 1)
                os << "\\frac{\\partial}{\\partial " << vars_->latex(i) << "}";
            else
                os << "\\frac{\\partial^{" << k.beta[i] << "}}{\\partial " << vars_->latex(i)
                   << "^{" << k.beta[i] << "}}";
        }
        first = false;
    }
    return os.str();
}

std::string WeylOp::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [k, c] : emission_sorted(*this)) {
        if (!first) os << ",";
        os << "{\"alpha\":[";
        for (std::size_t i = 0; i < k.alpha.size(); ++i)
            os << (i ? "," : "") << k.alpha[i];
        os << "],\"beta\":[";
        for (std::size_t i = 0; i < k.beta.size(); ++i) os << (i ? "," : "") << k.beta[i];
        os << "],\"coeff\":\"" << c.str() << "\"}";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace rcweyl
