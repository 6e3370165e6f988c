#include "doctest.h"

#include "rcweyl/geometry.hpp"

using namespace rcweyl;

namespace {

// All monomials of the context with total degree exactly k.
std::vector<Poly> monomials_of_degree(VarCtxPtr vars, ParamCtxPtr par, unsigned k) {
    std::vector<Poly> out;
    Mono cur(vars->size(), 0);
    while (true) {
        if (mono_degree(cur) == k)
            out.push_back(Poly::monomial(vars, cur, RatFunc::constant(par, BigRat(1))));
        std::size_t i = 0;
        while (i < vars->size() && cur[i] == k) cur[i++] = 0;
        if (i == vars->size()) break;
        ++cur[i];
    }
    return out;
}

}  // namespace

TEST_CASE("build_geometry: SO(3) layout") {
    GeometrySpec g = build_geometry(GeomFamily::SO, 3);
    CHECK(g.zeta->names() == std::vector<std::string>{"zeta_1", "zeta_2", "zeta_3"});
    CHECK(g.nplus == std::vector<std::string>{"C1", "C2", "C3"});
    CHECK(g.nplus_tau == std::vector<std::string>{"C1", "C2"});
    CHECK(g.nplus_minus_tau == std::vector<std::string>{"C3"});
    CHECK(g.fiber_dim == 0);
    CHECK_THROWS_AS(build_geometry(GeomFamily::SO, 1), std::invalid_argument);
}

TEST_CASE("build_geometry: UU(1) has the diagonal generator and 2 variables") {
    GeometrySpec g = build_geometry(GeomFamily::UU, 1);
    CHECK(g.zeta->names() == std::vector<std::string>{"zetap_1", "zetapp_1"});
    CHECK(g.nplus_tau == std::vector<std::string>{"C1"});
    CHECK(dpi_hat(g, "C1") == dpi_hat(g, "Cp1") + dpi_hat(g, "Cpp1"));
}

TEST_CASE("build_geometry: SP(2) has 3 packed variables") {
    GeometrySpec g = build_geometry(GeomFamily::SP, 2);
    CHECK(g.zeta->names() ==
          std::vector<std::string>{"zeta_11", "zeta_12", "zeta_22"});
    CHECK(g.sp_index(1, 1) == 0);
    CHECK(g.sp_index(2, 1) == 1);
    CHECK(g.sp_index(2, 2) == 2);
    CHECK(g.nplus_tau == std::vector<std::string>{"C11", "C22"});
    CHECK(g.nplus_minus_tau == std::vector<std::string>{"C12"});
}

TEST_CASE("dpi_hat SO: lambda d1 + E d1 - 1/2 zeta1 box, kills constants") {
    GeometrySpec g = build_geometry(GeomFamily::SO, 3);
    WeylOp d1 = WeylOp::derivative(g.zeta, g.params, 0);
    WeylOp box(g.zeta, g.params);
    for (std::size_t k = 0; k < 3; ++k) {
        Mono b(3, 0);
        b[k] = 2;
        box.add_term(Mono(3, 0), b, g.rf(1));
    }
    WeylOp expected = d1.scaled(g.lambda()) + compose(WeylOp::euler(g.zeta, g.params), d1) -
                      compose(WeylOp::position(g.zeta, g.params, 0), box)
                          .scaled(g.rf(1) / g.rf(2));
    CHECK(dpi_hat(g, "C1") == expected);

    Poly one = Poly::constant(g.zeta, g.rf(1));
    CHECK(apply(dpi_hat(g, "C1"), one).is_zero());
}

TEST_CASE("dpi_hat has degree -1 and the shape a zeta d d + b d") {
    for (auto fam : {GeomFamily::SO, GeomFamily::SP, GeomFamily::UU}) {
        for (int n = fam == GeomFamily::UU ? 1 : 2; n <= 4; ++n) {
            GeometrySpec g = build_geometry(fam, n);
            for (const auto& gen : g.nplus) {
                WeylOp op = dpi_hat(g, gen);
                CHECK(op.order() <= 2);
                for (const auto& [k, c] : op.terms()) {
                    int deg = static_cast<int>(mono_degree(k.alpha)) -
                              static_cast<int>(mono_degree(k.beta));
                    CHECK(deg == -1);
                    CHECK(mono_degree(k.alpha) <= 1);
                }
                // Pol^k -> Pol^(k-1) for k <= 6.
                for (unsigned k = 0; k <= 6; ++k) {
                    for (const auto& m : monomials_of_degree(g.zeta, g.params, k)) {
                        Poly im = apply(op, m);
                        if (im.is_zero()) continue;
                        CHECK(im.total_degree() == k - 1);
                        // Homogeneous image: lowest-degree term matches too.
                        CHECK(mono_degree(im.terms().begin()->first) == k - 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("abelian nilradical: dpi_hat generators commute pairwise, n <= 4") {
    for (auto fam : {GeomFamily::SO, GeomFamily::SP, GeomFamily::UU}) {
        for (int n = fam == GeomFamily::UU ? 1 : 2; n <= 4; ++n) {
            GeometrySpec g = build_geometry(fam, n);
            for (std::size_t a = 0; a < g.nplus.size(); ++a)
                for (std::size_t b = a + 1; b < g.nplus.size(); ++b)
                    CHECK(commutator(dpi_hat(g, g.nplus[a]), dpi_hat(g, g.nplus[b]))
                              .is_zero());
        }
    }
}

TEST_CASE("dpi_z SO source matches -mu z1 - z1 E + 1/2 Q d1") {
    GeometrySpec g = build_geometry(GeomFamily::SO, 3);
    RatFunc mu = -g.lambda() + g.rf(3);
    WeylOp z1 = WeylOp::position(g.zvars, g.params, 0);
    WeylOp d1 = WeylOp::derivative(g.zvars, g.params, 0);
    Poly q = sum_of_squares(g.zvars, g.params, 0, 3);
    WeylOp expected = z1.scaled(-mu) - compose(z1, WeylOp::euler(g.zvars, g.params)) +
                      compose(WeylOp::multiplication(q), d1).scaled(g.rf(1) / g.rf(2));
    CHECK(dpi_z(g, "C1", GenRole::source) == expected);

    // Normal-direction generator applied to 1 gives -mu z3.
    Poly one = Poly::constant(g.zvars, g.rf(1));
    Poly img = apply(dpi_z(g, "C3", GenRole::source), one);
    Poly z3 = Poly::variable(g.zvars, g.params, 2);
    CHECK(img == z3.scaled(-mu));
}

TEST_CASE("dpi_z UU diagonal raising element is a sum of two one-factor operators") {
    GeometrySpec g = build_geometry(GeomFamily::UU, 1);
    WeylOp op = dpi_z(g, "C1", GenRole::source);
    CHECK(op == dpi_z(g, "Cp1", GenRole::source) + dpi_z(g, "Cpp1", GenRole::source));
    // Each block has the one-variable quadratic-vector-field shape c1 z^2 d + c0 z.
    for (const auto& [k, c] : op.terms()) {
        bool quad = mono_degree(k.alpha) == 2 && mono_degree(k.beta) == 1;
        bool lin = mono_degree(k.alpha) == 1 && mono_degree(k.beta) == 0;
        CHECK((quad || lin));
    }
}

TEST_CASE("Fourier consistency: hat of dpi_z source reproduces dpi_hat (SO, n=2,3,4)") {
    for (int n = 2; n <= 4; ++n) {
        GeometrySpec g = build_geometry(GeomFamily::SO, n);
        for (const auto& gen : g.nplus) {
            WeylOp lhs = fourier_hat(dpi_z(g, gen, GenRole::source), g.zeta);
            CHECK(lhs == dpi_hat(g, gen));
        }
    }
}

TEST_CASE("Fourier consistency holds for the UU factors as well") {
    for (int n = 1; n <= 3; ++n) {
        GeometrySpec g = build_geometry(GeomFamily::UU, n);
        for (const auto& gen : g.nplus) {
            WeylOp lhs = fourier_hat(dpi_z(g, gen, GenRole::source), g.zeta);
            CHECK(lhs == dpi_hat(g, gen));
        }
    }
}

TEST_CASE("SP dpi_hat is block-conjugate to the symmetric-coordinate transform") {
    // Reference route: z_ij -> (1+delta_ij)/2 d_ij, d_z_ij -> (delta_ij-2) zeta_ij,
    // then conjugate by the substitution zeta_ij -> 2 zeta_ij on the upper block.
    for (int n = 2; n <= 3; ++n) {
        GeometrySpec g = build_geometry(GeomFamily::SP, n);
        std::vector<WeylOp> ximg, dimg;
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                std::size_t s = g.sp_index(i, j);
                ximg.push_back(WeylOp::derivative(g.zeta, g.params, s)
                                   .scaled(g.rf(1 + (i == j)) / g.rf(2)));
                dimg.push_back(WeylOp::position(g.zeta, g.params, s)
                                   .scaled(g.rf((i == j) - 2)));
            }
        }
        for (const auto& gen : g.nplus) {
            WeylOp plain = substitute_generators(dpi_z(g, gen, GenRole::source), ximg, dimg);
            // Conjugate each normal-ordered term by the block scaling.
            WeylOp conj(g.zeta, g.params);
            for (const auto& [k, c] : plain.terms()) {
                long grade = 0;
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i; j <= n - 1; ++j) {
                        std::size_t s = g.sp_index(i, j);
                        grade += static_cast<long>(k.alpha[s]) -
                                 static_cast<long>(k.beta[s]);
                    }
                RatFunc f = grade >= 0
                                ? g.rf(1).scaled(BigRat(2).pow(static_cast<unsigned>(grade)))
                                : g.rf(1) / g.rf(1).scaled(
                                                BigRat(2).pow(static_cast<unsigned>(-grade)));
                conj.add_term(k.alpha, k.beta, c * f);
            }
            CHECK(conj == dpi_hat(g, gen));
        }
    }
}

TEST_CASE("SP dpi_hat annihilates the Gegenbauer weight-space vectors (n=2,3)") {
    for (int n = 2; n <= 3; ++n) {
        GeometrySpec g = build_geometry(GeomFamily::SP, n);
        RatFunc lam = g.lambda();
        const std::size_t nv = g.zeta->size();
        // a=2: 2 lambda zeta_1n^2 - 2 zeta_11 zeta_nn, i.e. C_2^{lambda-1}(2 z11 znn, z1n)
        Poly psi2(g.zeta, g.params);
        {
            Mono m(nv, 0);
            m[g.sp_index(1, n)] = 2;
            psi2.set_coeff(m, g.rf(2) * lam);
        }
        {
            Mono m(nv, 0);
            m[g.sp_index(1, 1)] += 1;
            m[g.sp_index(n, n)] += 1;
            psi2.set_coeff(m, g.rf(-2));
        }
        // a=3: (lambda+1) zeta_1n^3 - 3 zeta_11 zeta_1n zeta_nn
        Poly psi3(g.zeta, g.params);
        {
            Mono m(nv, 0);
            m[g.sp_index(1, n)] = 3;
            psi3.set_coeff(m, lam + g.rf(1));
        }
        {
            Mono m(nv, 0);
            m[g.sp_index(1, 1)] += 1;
            m[g.sp_index(1, n)] += 1;
            m[g.sp_index(n, n)] += 1;
            psi3.set_coeff(m, g.rf(-3));
        }
        for (const auto& gen : g.nplus_tau) {
            CHECK(apply(dpi_hat(g, gen), psi2).is_zero());
            CHECK(apply(dpi_hat(g, gen), psi3).is_zero());
        }
    }
}

TEST_CASE("translation parts of dpi_z commute (SO)") {
    GeometrySpec g = build_geometry(GeomFamily::SO, 4);
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(commutator(dpi_z(g, "Cbar" + std::to_string(i), GenRole::source),
                             dpi_z(g, "Cbar" + std::to_string(j), GenRole::source))
                      .is_zero());
}

TEST_CASE("gl_beta: AX + B - XCX - XD") {
    auto par = make_params({"x"});
    auto one = RatFunc::constant(par, BigRat(1));
    auto zero = RatFunc(par);
    auto x = RatFunc::param(par, 0);
    RatMatrix A{{one}}, B{{one}}, C{{one}}, D{{one}}, X{{x}};
    RatMatrix r = gl_beta(A, B, C, D, X);
    CHECK(r[0][0] == one - x * x);

    RatMatrix Z{{zero}};
    CHECK(gl_beta(Z, Z, Z, Z, X)[0][0].is_zero());
    CHECK(gl_beta(A, Z, Z, Z, X)[0][0] == x);

    RatMatrix bad{{one, one}};
    CHECK_THROWS_AS(gl_beta(bad, B, C, D, X), std::invalid_argument);
}

TEST_CASE("geometry JSON dump is stable") {
    GeometrySpec g = build_geometry(GeomFamily::UU, 1);
    CHECK(g.json() ==
          "{\"family\":\"uu\",\"n\":1,\"params\":[\"lp1\",\"lp2\",\"lpp1\",\"lpp2\"],"
          "\"zeta_vars\":[\"zetap_1\",\"zetapp_1\"],\"z_vars\":[\"zp_1\",\"zpp_1\"],"
          "\"nplus\":[\"Cp1\",\"Cpp1\"],\"nplus_tau\":[\"C1\"],"
          "\"nplus_minus_tau\":[\"Cm1\"],\"gtau\":[\"E\",\"H\",\"F\"],\"fiber_dim\":1}");
}
