// Randomized structure checks for the Weyl layer: Fourier multiplicativity,
// the double-transform antipode rule, the matrix-action shift, the symbol/
// left-right action relation on an abelian Lie algebra, and module axioms.
// All instances are exact and seed-pinned.

#include "doctest.h"

#include <random>

#include "rcweyl/weyl.hpp"

using namespace rcweyl;

namespace {

struct Rnd {
    std::mt19937 rng;
    ParamCtxPtr par = make_params({"l"});
    VarCtxPtr z;
    VarCtxPtr zeta;
    std::size_t n;

    Rnd(unsigned seed, std::size_t nvars) : rng(seed), n(nvars) {
        z = make_indexed_vars("z", n);
        zeta = make_indexed_vars("zeta", n);
    }

    RatFunc coeff() {
        std::uniform_int_distribution<int> c(-3, 3);
        std::uniform_int_distribution<int> d(0, 1);
        RatFunc r = RatFunc::constant(par, BigRat(c(rng)));
        if (d(rng)) r += RatFunc::param(par, 0) * RatFunc::constant(par, BigRat(c(rng)));
        return r;
    }

    Mono mono(unsigned maxdeg) {
        std::uniform_int_distribution<unsigned> e(0, maxdeg);
        Mono m(n, 0);
        for (auto& v : m) v = e(rng);
        return m;
    }

    WeylOp op(unsigned terms, unsigned maxdeg) {
        WeylOp w(z, par);
        for (unsigned t = 0; t < terms; ++t) w.add_term(mono(maxdeg), mono(maxdeg), coeff());
        return w;
    }

    Poly poly(unsigned terms, unsigned maxdeg) {
        Poly p(z, par);
        for (unsigned t = 0; t < terms; ++t)
            p.set_coeff(mono(maxdeg), p.coeff(mono(maxdeg)) + coeff());
        return p;
    }

    std::vector<std::vector<RatFunc>> matrix() {
        std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n, RatFunc(par)));
        for (auto& row : a)
            for (auto& v : row) v = coeff();
        return a;
    }
};


}  // namespace

TEST_CASE("fourier_hat is an algebra homomorphism (>=100 random pairs)") {
    Rnd r(0xC0FFEE, 3);
    for (int i = 0; i < 100; ++i) {
        WeylOp a = r.op(3, 2), b = r.op(3, 2);
        CHECK(fourier_hat(compose(a, b), r.zeta) ==
              compose(fourier_hat(a, r.zeta), fourier_hat(b, r.zeta)));
    }
}

TEST_CASE("double Fourier transform is the antipodal conjugation (>=100 cases)") {
    Rnd r(0xB00, 3);
    for (int i = 0; i < 100; ++i) {
        WeylOp a = r.op(4, 3);
        WeylOp twice = fourier_hat(fourier_hat(a, r.zeta), r.z);
        CHECK(twice == antipode(a));
    }
}

TEST_CASE("hat Psi_sigma = Psi_sigma_dual + trace (>=100 random matrices)") {
    for (std::size_t n : {2u, 3u}) {
        Rnd r(0xFEED + static_cast<unsigned>(n), n);
        for (int i = 0; i < 60; ++i) {
            auto a = r.matrix();
            RatFunc tr(r.par);
            for (std::size_t k = 0; k < n; ++k) tr += a[k][k];
            WeylOp lhs = fourier_hat(matrix_action(a, ActionSide::primal, r.z, r.par), r.zeta);
            WeylOp rhs = matrix_action(a, ActionSide::dual, r.zeta, r.par) +
                         WeylOp::identity(r.zeta, r.par).scaled(tr);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Symb(dR(u)) = hat(dL(u)) on the abelian algebra, monomials up to degree 4") {
    // dR(X) = +d_X and dL(X) = -d_X; u runs over all monomials of S(E).
    ParamCtxPtr par = make_params({"l"});
    for (std::size_t n : {1u, 2u, 3u}) {
        VarCtxPtr z = make_indexed_vars("z", n);
        VarCtxPtr zeta = make_indexed_vars("zeta", n);
        std::vector<Mono> monos;
        Mono cur(n, 0);
        // Enumerate exponent vectors of total degree <= 4.
        while (true) {
            if (mono_degree(cur) <= 4) monos.push_back(cur);
            std::size_t i = 0;
            while (i < n && cur[i] == 4) cur[i++] = 0;
            if (i == n) break;
            ++cur[i];
        }
        for (const Mono& u : monos) {
            WeylOp dR(z, par);
            dR.add_term(Mono(n, 0), u, RatFunc::constant(par, BigRat(1)));
            int sign = mono_degree(u) % 2 ? -1 : 1;
            WeylOp dL = dR.scaled(RatFunc::constant(par, BigRat(sign)));
            Poly lhs = symbol(dR, zeta);
            WeylOp rhs_op = fourier_hat(dL, zeta);
            // hat(dL(u)) is a multiplication operator; read it as a polynomial.
            Poly rhs(zeta, par);
            for (const auto& [k, c] : rhs_op.terms()) {
                REQUIRE(mono_degree(k.beta) == 0);
                rhs.set_coeff(k.alpha, c);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("aFP: hat of dP is (-1)^deg P as multiplication; hat of Q(x) is dQ") {
    Rnd r(0xAF, 3);
    for (int i = 0; i < 100; ++i) {
        // Homogeneous P of degree ell built from random monomials.
        std::uniform_int_distribution<unsigned> ell(0, 4);
        unsigned deg = ell(r.rng);
        Poly p(r.zeta, r.par);
        for (int t = 0; t < 3; ++t) {
            Mono m = r.mono(deg);
            // Pad the first slot to reach exact degree.
            unsigned d = mono_degree(m);
            if (d > deg) continue;
            m[0] += deg - d;
            p.set_coeff(m, p.coeff(m) + r.coeff());
        }
        WeylOp dp = symbol_inverse(p, r.z);
        WeylOp hat = fourier_hat(dp, r.zeta);
        int sign = deg % 2 ? -1 : 1;
        WeylOp expected = WeylOp::multiplication(p.scaled(RatFunc::constant(r.par, BigRat(sign))));
        CHECK(hat == expected);

        // Multiplication by Q(x) on the primal side.
        Poly qx = r.poly(3, 2);
        WeylOp mul = WeylOp::multiplication(qx);
        // Move the polynomial into the dual variables to compare symbols.
        Poly qzeta(r.zeta, r.par);
        for (const auto& [m, c] : qx.terms()) qzeta.set_coeff(m, c);
        CHECK(fourier_hat(mul, r.zeta) == symbol_inverse(qzeta, r.zeta));
    }
}

TEST_CASE("compose is associative; apply is a module action (random triples)") {
    Rnd r(0xACC, 3);
    for (int i = 0; i < 100; ++i) {
        WeylOp a = r.op(3, 2), b = r.op(3, 2), c = r.op(3, 2);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        Poly p = r.poly(3, 3);
        CHECK(apply(compose(a, b), p) == apply(a, apply(b, p)));
        Poly q = r.poly(3, 3);
        CHECK(apply(a, p + q) == apply(a, p) + apply(a, q));
    }
}
