#pragma once

#include "rcweyl/weyl.hpp"

namespace rcweyl {

enum class GeomFamily { SO, SP, UU };

std::string family_name(GeomFamily f);
GeomFamily family_from_name(const std::string& s);

enum class GenRole { source, target };

// One of the three split rank one settings. Public parameters are the lambda's
// of the closed-form theorems; the internal shifts between lambda and the
// induced-module parameter are stored here.
struct GeometrySpec {
    GeomFamily family;
    int n;
    ParamCtxPtr params;
    VarCtxPtr zeta;   // dual-side variables
    VarCtxPtr zvars;  // flat coordinates on the source domain

    std::vector<std::string> nplus;            // all generators of n_+
    std::vector<std::string> nplus_tau;        // the invariant part (solver equations)
    std::vector<std::string> nplus_minus_tau;  // the -1 eigenspace part
    std::vector<std::string> gtau;             // flat-model generator table of g^tau

    // Fiber dimension m of the target S^a(C^m) factor: 0 (SO), n-1 (SP), n (UU).
    int fiber_dim = 0;

    // lambda for SO/SP.
    RatFunc lambda() const;
    // Parameter differences lambda' and lambda'' for UU.
    RatFunc lambda_p() const;
    RatFunc lambda_pp() const;
    RatFunc rf(long v) const { return RatFunc::constant(params, BigRat(v)); }

    // mu = -lambda + rho_shift (SO: n, SP: n+1).
    long rho_shift() const;

    // Coefficients of the hatted first-order terms for UU: a1 = -lambda' + n + 1
    // on the primed block and a2 = -lambda'' + n - 1 on the double-primed block.
    RatFunc uu_a1() const;
    RatFunc uu_a2() const;

    std::size_t sp_index(int i, int j) const;  // packed symmetric index, 1-based
    std::size_t uu_p_index(int k) const;       // zeta'_k slot, 1-based
    std::size_t uu_pp_index(int k) const;      // zeta''_k slot, 1-based

    std::string json() const;
};

GeometrySpec build_geometry(GeomFamily family, int n);

// zeta-side action of an n_+ generator: degree -1, order <= 2.
WeylOp dpi_hat(const GeometrySpec& g, const std::string& gen);

// Flat-picture action of a g^tau generator (first order). Source role uses the
// induced parameter mu; the target role uses the subgeometry with parameter
// lambda + a (SO only). SP supports the n_+ generators in the source role.
WeylOp dpi_z(const GeometrySpec& g, const std::string& gen, GenRole role, int a = 0);

// Same vector fields with an explicit multiplier value in place of mu; the
// intertwining checks run in the section model where the multiplier is lambda.
WeylOp so_flat_action(const GeometrySpec& g, const std::string& gen, const RatFunc& mult,
                      VarCtxPtr vars);

using RatMatrix = std::vector<std::vector<RatFunc>>;

// beta(Y, X) = AX + B - XCX - XD for the block matrix Y = [[A,B],[C,D]].
RatMatrix gl_beta(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c,
                  const RatMatrix& d, const RatMatrix& x);

// Q_m over the first m variables of ctx, offset into the context.
Poly sum_of_squares(VarCtxPtr ctx, ParamCtxPtr params, std::size_t offset, std::size_t m);

}  // namespace rcweyl
