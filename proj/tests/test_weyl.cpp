#include "doctest.h"

#include "rcweyl/weyl.hpp"

using namespace rcweyl;

namespace {

struct Fix {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z = make_indexed_vars("z", 3);
    VarCtxPtr zeta = make_indexed_vars("zeta", 3);

    RatFunc one() const { return RatFunc::constant(par, BigRat(1)); }
    RatFunc q(long n) const { return RatFunc::constant(par, BigRat(n)); }
    RatFunc lam() const { return RatFunc::param(par, 0); }
    WeylOp x(std::size_t i) const { return WeylOp::position(z, par, i); }
    WeylOp d(std::size_t i) const { return WeylOp::derivative(z, par, i); }
    Poly zvar(std::size_t i) const { return Poly::variable(z, par, i); }
};

}  // namespace

TEST_CASE("apply: Euler eigenvalue z1 d1 (z1^k) = k z1^k") {
    Fix f;
    WeylOp euler1 = compose(f.x(0), f.d(0));
    for (unsigned k = 1; k <= 5; ++k) {
        Poly p = f.zvar(0).pow(k);
        CHECK(apply(euler1, p) == p.scaled(f.q(k)));
    }
}

TEST_CASE("apply: d1^2 (z1^2+z2^2) = 2") {
    Fix f;
    WeylOp d11 = compose(f.d(0), f.d(0));
    Poly p = f.zvar(0).pow(2) + f.zvar(1).pow(2);
    CHECK(apply(d11, p) == Poly::constant(f.z, f.q(2)));
}

TEST_CASE("apply: z1 d2 (z2^3) = 3 z1 z2^2") {
    Fix f;
    WeylOp op = compose(f.x(0), f.d(1));
    CHECK(apply(op, f.zvar(1).pow(3)) == (f.zvar(0) * f.zvar(1).pow(2)).scaled(f.q(3)));
}

TEST_CASE("apply: context mismatch is an error") {
    Fix f;
    Poly p = Poly::variable(f.zeta, f.par, 0);
    CHECK_THROWS_AS(apply(f.d(0), p), std::invalid_argument);
}

TEST_CASE("compose: canonical commutation d1 z1 = z1 d1 + 1") {
    Fix f;
    WeylOp lhs = compose(f.d(0), f.x(0));
    WeylOp rhs = compose(f.x(0), f.d(0)) + WeylOp::identity(f.z, f.par);
    CHECK(lhs == rhs);
}

TEST_CASE("compose: (z1 d1)^2 = z1^2 d1^2 + z1 d1, eigenvalue k^2 on z1^k") {
    Fix f;
    WeylOp e1 = compose(f.x(0), f.d(0));
    WeylOp sq = compose(e1, e1);
    WeylOp expected = compose(compose(f.x(0), f.x(0)), compose(f.d(0), f.d(0))) + e1;
    CHECK(sq == expected);
    for (unsigned k = 0; k <= 6; ++k) {
        Poly p = f.zvar(0).pow(k);
        CHECK(apply(sq, p) == p.scaled(f.q(static_cast<long>(k) * k)));
    }
}

TEST_CASE("compose: derivatives commute") {
    Fix f;
    CHECK(commutator(f.d(0), f.d(1)).is_zero());
}

TEST_CASE("fourier_hat: d1 -> -zeta1, unit -> unit") {
    Fix f;
    WeylOp hat = fourier_hat(f.d(0), f.zeta);
    CHECK(hat == WeylOp::position(f.zeta, f.par, 0).scaled(-f.one()));
    CHECK(fourier_hat(WeylOp::identity(f.z, f.par), f.zeta) ==
          WeylOp::identity(f.zeta, f.par));
}

TEST_CASE("fourier_hat: E_z in 2 variables -> -E_zeta - 2") {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z2 = make_indexed_vars("z", 2);
    VarCtxPtr zeta2 = make_indexed_vars("zeta", 2);
    WeylOp ez = WeylOp::euler(z2, par);
    WeylOp expected = -WeylOp::euler(zeta2, par) -
                      WeylOp::identity(zeta2, par).scaled(RatFunc::constant(par, BigRat(2)));
    CHECK(fourier_hat(ez, zeta2) == expected);
}

TEST_CASE("symbol: Laplacian in 2 vars -> Q_2(zeta), and definitional cases") {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z2 = make_indexed_vars("z", 2);
    VarCtxPtr zeta2 = make_indexed_vars("zeta", 2);
    WeylOp lap(z2, par);
    lap.add_term({0, 0}, {2, 0}, RatFunc::constant(par, BigRat(1)));
    lap.add_term({0, 0}, {0, 2}, RatFunc::constant(par, BigRat(1)));
    Poly q = symbol(lap, zeta2);
    Poly expected = Poly::variable(zeta2, par, 0).pow(2) + Poly::variable(zeta2, par, 1).pow(2);
    CHECK(q == expected);
    CHECK(symbol(WeylOp::identity(z2, par), zeta2) ==
          Poly::constant(zeta2, RatFunc::constant(par, BigRat(1))));

    Fix f;
    WeylOp op(f.z, f.par);
    op.add_term({0, 0, 0}, {2, 1, 0}, f.one());
    Poly zeta_expected =
        Poly::variable(f.zeta, f.par, 0).pow(2) * Poly::variable(f.zeta, f.par, 1);
    CHECK(symbol(op, f.zeta) == zeta_expected);
}

TEST_CASE("symbol rejects variable coefficients") {
    Fix f;
    WeylOp op = compose(f.x(0), f.d(0));
    CHECK_THROWS_AS(symbol(op, f.zeta), std::domain_error);
}

TEST_CASE("symbol_inverse: zeta1^2 + 2 l zeta3^2 -> d1^2 + 2 l d3^2, inverse of symbol") {
    Fix f;
    Poly q = Poly::variable(f.zeta, f.par, 0).pow(2) +
             Poly::variable(f.zeta, f.par, 2).pow(2).scaled(f.q(2) * f.lam());
    WeylOp op = symbol_inverse(q, f.z);
    WeylOp expected(f.z, f.par);
    expected.add_term({0, 0, 0}, {2, 0, 0}, f.one());
    expected.add_term({0, 0, 0}, {0, 0, 2}, f.q(2) * f.lam());
    CHECK(op == expected);
    CHECK(symbol(op, f.zeta) == q);

    CHECK(symbol_inverse(Poly::constant(f.zeta, f.one()), f.z) ==
          WeylOp::identity(f.z, f.par));
    Poly z1z2 = Poly::variable(f.zeta, f.par, 0) * Poly::variable(f.zeta, f.par, 1);
    CHECK(symbol_inverse(z1z2, f.z) == compose(f.d(0), f.d(1)));
}

TEST_CASE("matrix_action: identity matrix, primal -> -E_z") {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z2 = make_indexed_vars("z", 2);
    RatFunc one = RatFunc::constant(par, BigRat(1));
    RatFunc zero(par);
    std::vector<std::vector<RatFunc>> id{{one, zero}, {zero, one}};
    CHECK(matrix_action(id, ActionSide::primal, z2, par) ==
          -WeylOp::euler(z2, par));
}

TEST_CASE("matrix_action: E_12, primal -> -z2 d1") {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z2 = make_indexed_vars("z", 2);
    RatFunc one = RatFunc::constant(par, BigRat(1));
    RatFunc zero(par);
    std::vector<std::vector<RatFunc>> e12{{zero, one}, {zero, zero}};
    WeylOp expected(z2, par);
    expected.add_term({0, 1}, {1, 0}, -one);
    CHECK(matrix_action(e12, ActionSide::primal, z2, par) == expected);
}

TEST_CASE("matrix_action: hat of primal equals dual plus trace for A = diag(1,2)") {
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z2 = make_indexed_vars("z", 2);
    VarCtxPtr zeta2 = make_indexed_vars("zeta", 2);
    RatFunc one = RatFunc::constant(par, BigRat(1));
    RatFunc two = RatFunc::constant(par, BigRat(2));
    RatFunc zero(par);
    std::vector<std::vector<RatFunc>> a{{one, zero}, {zero, two}};
    WeylOp lhs = fourier_hat(matrix_action(a, ActionSide::primal, z2, par), zeta2);
    WeylOp rhs = matrix_action(a, ActionSide::dual, zeta2, par) +
                 WeylOp::identity(zeta2, par).scaled(one + two);
    CHECK(lhs == rhs);
}

TEST_CASE("LaTeX and JSON emission are stable") {
    Fix f;
    WeylOp op = compose(f.x(0), f.d(2)) + f.d(0).scaled(f.lam());
    // Emission sorts terms by (|beta|, beta, alpha) lexicographically.
    CHECK(op.json() ==
          "[{\"alpha\":[1,0,0],\"beta\":[0,0,1],\"coeff\":\"1\"},"
          "{\"alpha\":[0,0,0],\"beta\":[1,0,0],\"coeff\":\"l\"}]");
    CHECK(op.latex() ==
          "z_{1}\\frac{\\partial}{\\partial z_{3}} + "
          "l\\,\\frac{\\partial}{\\partial z_{1}}");
}
