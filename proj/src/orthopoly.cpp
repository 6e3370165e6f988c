#include "rcweyl/orthopoly.hpp"

#include <sstream>

#include "rcweyl/weyl.hpp"

namespace rcweyl {

RatFunc rising(const RatFunc& x, unsigned k) {
    RatFunc acc = RatFunc::constant(x.ctx(), BigRat(1));
    for (unsigned i = 0; i < k; ++i)
        acc *= x + RatFunc::constant(x.ctx(), BigRat(static_cast<long>(i)));
    return acc;
}

OrthoPoly jacobi(unsigned l, const RatFunc& alpha, const RatFunc& beta, VarCtxPtr tvar) {
    if (tvar->size() != 1) throw std::invalid_argument("jacobi: expected one variable");
    ParamCtxPtr par = alpha.ctx();
    Poly t = Poly::variable(tvar, par, 0);
    Poly one = Poly::constant(tvar, RatFunc::constant(par, BigRat(1)));
    Poly acc(tvar, par);
    // (1/l!) sum_m binom(l,m) (alpha+m+1)_(l-m) (alpha+beta+l+1)_m ((t-1)/2)^m
    for (unsigned m = 0; m <= l; ++m) {
        RatFunc c = RatFunc::constant(par, binomial(l, m) / factorial(l));
        c *= rising(alpha + RatFunc::constant(par, BigRat(static_cast<long>(m) + 1)), l - m);
        c *= rising(alpha + beta + RatFunc::constant(par, BigRat(static_cast<long>(l) + 1)), m);
        Poly half = (t - one).scaled(RatFunc::constant(par, BigRat(1, 2)));
        acc += half.pow(m).scaled(c);
    }
    return OrthoPoly{OrthoFamily::jacobi, l, {alpha, beta}, acc};
}

OrthoPoly gegenbauer(unsigned l, const RatFunc& alpha, VarCtxPtr tvar) {
    if (tvar->size() != 1) throw std::invalid_argument("gegenbauer: expected one variable");
    ParamCtxPtr par = alpha.ctx();
    Poly t = Poly::variable(tvar, par, 0);
    Poly acc(tvar, par);
    // sum_k (-1)^k (alpha)_(l-k) / (k! (l-2k)!) (2t)^(l-2k)
    for (unsigned k = 0; 2 * k <= l; ++k) {
        RatFunc c = rising(alpha, l - k);
        BigRat scale = BigRat(k % 2 ? -1 : 1) / (factorial(k) * factorial(l - 2 * k));
        c *= RatFunc::constant(par, scale * BigRat(2).pow(l - 2 * k));
        acc += t.pow(l - 2 * k).scaled(c);
    }
    return OrthoPoly{OrthoFamily::gegenbauer, l, {alpha}, acc};
}

Poly inflate(const OrthoPoly& p, VarCtxPtr xyvars) {
    if (xyvars->size() != 2) throw std::invalid_argument("inflate: expected two variables");
    ParamCtxPtr par = p.parameters.front().ctx();
    Poly x = Poly::variable(xyvars, par, 0);
    Poly y = Poly::variable(xyvars, par, 1);
    Poly acc(xyvars, par);
    const unsigned l = p.degree;
    if (p.family == OrthoFamily::gegenbauer) {
        // x^(l/2) C_l(y/sqrt x) = sum_k (-1)^k (alpha)_(l-k)/(k!(l-2k)!) (2y)^(l-2k) x^k;
        // the half powers cancel term by term.
        const RatFunc& alpha = p.parameters[0];
        for (unsigned k = 0; 2 * k <= l; ++k) {
            RatFunc c = rising(alpha, l - k);
            BigRat scale = BigRat(k % 2 ? -1 : 1) / (factorial(k) * factorial(l - 2 * k));
            c *= RatFunc::constant(par, scale * BigRat(2).pow(l - 2 * k));
            acc += (y.pow(l - 2 * k) * x.pow(k)).scaled(c);
        }
    } else {
        // y^l P_l(2x/y + 1) = (1/l!) sum_m binom(l,m)(alpha+m+1)_(l-m)(alpha+beta+l+1)_m x^m y^(l-m)
        const RatFunc& alpha = p.parameters[0];
        const RatFunc& beta = p.parameters[1];
        for (unsigned m = 0; m <= l; ++m) {
            RatFunc c = RatFunc::constant(par, binomial(l, m) / factorial(l));
            c *= rising(alpha + RatFunc::constant(par, BigRat(static_cast<long>(m) + 1)), l - m);
            c *= rising(alpha + beta + RatFunc::constant(par, BigRat(static_cast<long>(l) + 1)), m);
            acc += (x.pow(m) * y.pow(l - m)).scaled(c);
        }
    }
    return acc;
}

WeylOp ode_operator(OdeKind kind, const OdeParams& params, VarCtxPtr tvar, ParamCtxPtr pctx) {
    if (tvar->size() != 1) throw std::invalid_argument("ode_operator: expected one variable");
    auto cst = [&](const BigRat& c) { return RatFunc::constant(pctx, c); };
    auto need = [&](const std::optional<RatFunc>& p, const char* what) -> const RatFunc& {
        if (!p) throw std::invalid_argument(std::string("ode_operator: missing parameter ") + what);
        return *p;
    };
    WeylOp t = WeylOp::position(tvar, pctx, 0);
    WeylOp d = WeylOp::derivative(tvar, pctx, 0);
    WeylOp theta = compose(t, d);
    WeylOp theta2 = compose(theta, theta);
    WeylOp one = WeylOp::identity(tvar, pctx);
    WeylOp t2 = compose(t, t);
    WeylOp d2 = compose(d, d);
    long ell = params.degree;

    switch (kind) {
        case OdeKind::gegenbauer: {
            // (1-t^2) theta^2 - (1 + 2 alpha t^2) theta + l(l+2 alpha) t^2
            const RatFunc& al = need(params.alpha, "alpha");
            WeylOp lhs = compose(one - t2, theta2);
            lhs -= compose(one + t2.scaled(cst(BigRat(2)) * al), theta);
            lhs += t2.scaled((cst(BigRat(ell)) + cst(BigRat(2)) * al).scaled(BigRat(ell)));
            return lhs;
        }
        case OdeKind::jacobi: {
            // (1-t^2) d^2 + (beta - alpha - (alpha+beta+2) t) d + l(l+alpha+beta+1)
            const RatFunc& al = need(params.alpha, "alpha");
            const RatFunc& be = need(params.beta, "beta");
            WeylOp lhs = compose(one - t2, d2);
            WeylOp first = one.scaled(be - al) - compose(t, one).scaled(al + be + cst(BigRat(2)));
            lhs += compose(first, d);
            lhs += one.scaled((cst(BigRat(ell)) + al + be + cst(BigRat(1))).scaled(BigRat(ell)));
            return lhs;
        }
        case OdeKind::de3: {
            // (1-s^2) theta^2 - (1 + (2 lambda - n + 1) s^2) theta + a(a + 2 lambda - n + 1) s^2
            const RatFunc& lam = need(params.lambda, "lambda");
            RatFunc c = cst(BigRat(2)) * lam - cst(BigRat(params.n)) + cst(BigRat(1));
            WeylOp lhs = compose(one - t2, theta2);
            lhs -= compose(one + t2.scaled(c), theta);
            lhs += t2.scaled((cst(BigRat(ell)) + c).scaled(BigRat(ell)));
            return lhs;
        }
        case OdeKind::de2: {
            // (1-t^2) theta^2 - (1 + 2(n - mu) t^2) theta + a(a + 2(n - mu)) t^2,
            // with mu = -lambda + n + 1, so n - mu = lambda - 1.
            const RatFunc& lam = need(params.lambda, "lambda");
            RatFunc c = cst(BigRat(2)) * (lam - cst(BigRat(1)));
            WeylOp lhs = compose(one - t2, theta2);
            lhs -= compose(one + t2.scaled(c), theta);
            lhs += t2.scaled((cst(BigRat(ell)) + c).scaled(BigRat(ell)));
            return lhs;
        }
        case OdeKind::de1: {
            // (1-s^2) d^2 + q(s) d + a(1 - a2 - a),
            // q(s) = s(a2 - 2 + 2a) - 2 a1 - a2 - 2a + 2.
            const RatFunc& a1 = need(params.a1, "a1");
            const RatFunc& a2 = need(params.a2, "a2");
            WeylOp lhs = compose(one - t2, d2);
            RatFunc slope = a2 - cst(BigRat(2)) + cst(BigRat(2 * ell));
            RatFunc intercept =
                -(cst(BigRat(2)) * a1) - a2 - cst(BigRat(2 * ell)) + cst(BigRat(2));
            lhs += compose(compose(t, one).scaled(slope) + one.scaled(intercept), d);
            lhs += one.scaled((cst(BigRat(1)) - a2 - cst(BigRat(ell))).scaled(BigRat(ell)));
            return lhs;
        }
    }
    throw std::logic_error("ode_operator: unknown kind");
}

Poly ode_residual(OdeKind kind, const OdeParams& params, const Poly& g) {
    WeylOp op = ode_operator(kind, params, g.vars(), g.params());
    return apply(op, g);
}

std::string OrthoPoly::latex() const {
    std::ostringstream os;
    if (family == OrthoFamily::jacobi) {
        os << "P_{" << degree << "}^{" << parameters[0].str() << "," << parameters[1].str()
           << "}";
    } else {
        os << "C_{" << degree << "}^{" << parameters[0].str() << "}";
    }
    os << "(t) = " << coeffs.latex();
    return os.str();
}

std::string OrthoPoly::json() const {
    std::ostringstream os;
    os << "{\"family\":\"" << (family == OrthoFamily::jacobi ? "jacobi" : "gegenbauer")
       << "\",\"degree\":" << degree << ",\"parameters\":[";
    for (std::size_t i = 0; i < parameters.size(); ++i)
        os << (i ? "," : "") << "\"" << parameters[i].str() << "\"";
    os << "],\"coeffs\":[";
    bool first = true;
    for (unsigned k = 0; k <= coeffs.total_degree(); ++k) {
        if (!first) os << ",";
        os << "\"" << coeffs.coeff({k}).str() << "\"";
        first = false;
    }
    os << "]}";
    return os.str();
}

}  // namespace rcweyl
