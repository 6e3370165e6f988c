#include "rcweyl/geometry.hpp"

#include <sstream>

namespace rcweyl {

std::string family_name(GeomFamily f) {
    switch (f) {
        case GeomFamily::SO: return "so";
        case GeomFamily::SP: return "sp";
        case GeomFamily::UU: return "uu";
    }
    return "?";
}

GeomFamily family_from_name(const std::string& s) {
    if (s == "so" || s == "SO") return GeomFamily::SO;
    if (s == "sp" || s == "SP") return GeomFamily::SP;
    if (s == "uu" || s == "UU") return GeomFamily::UU;
    throw std::invalid_argument("unknown geometry family '" + s + "'");
}

RatFunc GeometrySpec::lambda() const {
    if (family == GeomFamily::UU)
        throw std::invalid_argument("lambda(): UU uses lambda_p/lambda_pp");
    return RatFunc::param(params, 0);
}

RatFunc GeometrySpec::lambda_p() const {
    if (family != GeomFamily::UU) throw std::invalid_argument("lambda_p(): UU only");
    return RatFunc::param(params, 0) - RatFunc::param(params, 1);
}

RatFunc GeometrySpec::lambda_pp() const {
    if (family != GeomFamily::UU) throw std::invalid_argument("lambda_pp(): UU only");
    return RatFunc::param(params, 2) - RatFunc::param(params, 3);
}

long GeometrySpec::rho_shift() const {
    switch (family) {
        case GeomFamily::SO: return n;
        case GeomFamily::SP: return n + 1;
        case GeomFamily::UU: break;
    }
    throw std::invalid_argument("rho_shift(): per-factor shifts for UU");
}

RatFunc GeometrySpec::uu_a1() const { return -lambda_p() + rf(n + 1); }
RatFunc GeometrySpec::uu_a2() const { return -lambda_pp() + rf(n - 1); }

std::size_t GeometrySpec::sp_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw std::out_of_range("sp_index");
    std::size_t off = static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) -
                      static_cast<std::size_t>((i - 1) * (i - 2) / 2);
    return off + static_cast<std::size_t>(j - i);
}

std::size_t GeometrySpec::uu_p_index(int k) const {
    if (k < 1 || k > n) throw std::out_of_range("uu_p_index");
    return static_cast<std::size_t>(k - 1);
}

std::size_t GeometrySpec::uu_pp_index(int k) const {
    if (k < 1 || k > n) throw std::out_of_range("uu_pp_index");
    return static_cast<std::size_t>(n + k - 1);
}

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

GeometrySpec build_geometry(GeomFamily family, int n) {
    GeometrySpec g;
    g.family = family;
    g.n = n;
    switch (family) {
        case GeomFamily::SO: {
            if (n < 2) throw std::invalid_argument("build_geometry: SO requires n >= 2");
            g.params = make_params({"lambda"}, {"\\lambda"});
            g.zeta = make_indexed_vars("zeta", static_cast<std::size_t>(n), "\\zeta");
            g.zvars = make_indexed_vars("z", static_cast<std::size_t>(n), "z");
            for (int j = 1; j <= n; ++j) g.nplus.push_back("C" + idx(j));
            for (int j = 1; j < n; ++j) g.nplus_tau.push_back("C" + idx(j));
            g.nplus_minus_tau.push_back("C" + idx(n));
            for (int j = 1; j < n; ++j) g.gtau.push_back("C" + idx(j));
            for (int j = 1; j < n; ++j) g.gtau.push_back("Cbar" + idx(j));
            g.gtau.push_back("H0");
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.gtau.push_back("M" + idx(i) + idx(j));
            g.fiber_dim = 0;
            break;
        }
        case GeomFamily::SP: {
            if (n < 2) throw std::invalid_argument("build_geometry: SP requires n >= 2");
            g.params = make_params({"lambda"}, {"\\lambda"});
            std::vector<std::string> zn, zl, wn, wl;
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    zn.push_back("zeta_" + idx(i) + idx(j));
                    zl.push_back("\\zeta_{" + idx(i) + idx(j) + "}");
                    wn.push_back("z_" + idx(i) + idx(j));
                    wl.push_back("z_{" + idx(i) + idx(j) + "}");
                }
            }
            g.zeta = make_vars(zn, zl);
            g.zvars = make_vars(wn, wl);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) g.nplus.push_back("C" + idx(i) + idx(j));
            for (int i = 1; i < n; ++i)
                for (int j = i; j < n; ++j) g.nplus_tau.push_back("C" + idx(i) + idx(j));
            g.nplus_tau.push_back("C" + idx(n) + idx(n));
            for (int i = 1; i < n; ++i) g.nplus_minus_tau.push_back("C" + idx(i) + idx(n));
            g.gtau = g.nplus_tau;  // flat-model table: the n_+^tau generators
            g.fiber_dim = n - 1;
            break;
        }
        case GeomFamily::UU: {
            if (n < 1) throw std::invalid_argument("build_geometry: UU requires n >= 1");
            g.params = make_params({"lp1", "lp2", "lpp1", "lpp2"},
                                   {"\\lambda'_1", "\\lambda'_2", "\\lambda''_1",
                                    "\\lambda''_2"});
            std::vector<std::string> zn, zl, wn, wl;
            for (int i = 1; i <= n; ++i) {
                zn.push_back("zetap_" + idx(i));
                zl.push_back("\\zeta'_{" + idx(i) + "}");
                wn.push_back("zp_" + idx(i));
                wl.push_back("z'_{" + idx(i) + "}");
            }
            for (int i = 1; i <= n; ++i) {
                zn.push_back("zetapp_" + idx(i));
                zl.push_back("\\zeta''_{" + idx(i) + "}");
                wn.push_back("zpp_" + idx(i));
                wl.push_back("z''_{" + idx(i) + "}");
            }
            g.zeta = make_vars(zn, zl);
            g.zvars = make_vars(wn, wl);
            for (int i = 1; i <= n; ++i) g.nplus.push_back("Cp" + idx(i));
            for (int i = 1; i <= n; ++i) g.nplus.push_back("Cpp" + idx(i));
            for (int i = 1; i <= n; ++i) g.nplus_tau.push_back("C" + idx(i));
            for (int i = 1; i <= n; ++i) g.nplus_minus_tau.push_back("Cm" + idx(i));
            g.gtau = {"E", "H", "F"};
            g.fiber_dim = n;
            break;
        }
    }
    return g;
}

namespace {

[[noreturn]] void unknown_gen(const GeometrySpec& g, const std::string& gen) {
    throw std::invalid_argument("unknown generator '" + gen + "' for geometry " +
                                family_name(g.family) + "(n=" + std::to_string(g.n) + ")");
}

int parse_index(const std::string& gen, std::size_t prefix_len) {
    return std::stoi(gen.substr(prefix_len));
}

WeylOp so_dpi_hat(const GeometrySpec& g, int j) {
    const auto& par = g.params;
    WeylOp d = WeylOp::derivative(g.zeta, par, static_cast<std::size_t>(j - 1));
    WeylOp box(g.zeta, par);
    for (std::size_t k = 0; k < g.zeta->size(); ++k) {
        Mono beta(g.zeta->size(), 0);
        beta[k] = 2;
        box.add_term(Mono(g.zeta->size(), 0), beta, g.rf(1));
    }
    WeylOp op = d.scaled(g.lambda());
    op += compose(WeylOp::euler(g.zeta, par), d);
    op -= compose(WeylOp::position(g.zeta, par, static_cast<std::size_t>(j - 1)), box)
              .scaled(g.rf(1) / g.rf(2));
    return op;
}

RatMatrix sp_gen_matrix(const GeometrySpec& g, int k, int l) {
    RatMatrix c(static_cast<std::size_t>(g.n),
                std::vector<RatFunc>(static_cast<std::size_t>(g.n), RatFunc(g.params)));
    c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = g.rf(1);
    c[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k - 1)] = g.rf(1);
    if (k == l) c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)] = g.rf(1);
    return c;
}

WeylOp sp_dpi_z_source(const GeometrySpec& g, int k0, int l0);

// Symmetric-coordinate Fourier transform of the flat action,
//   z_ij -> (1+delta_ij)/2 d_ij,  d_z_ij -> (delta_ij - 2) zeta_ij,
// conjugated by the block rescaling zeta_ij -> 2 zeta_ij (i, j <= n-1). The
// conjugation puts the kernel into the normalization of the closed forms
// (Gegenbauer argument 2 zeta_11 zeta_nn) while keeping every generator
// rational and the family abelian.
WeylOp sp_dpi_hat(const GeometrySpec& g, int k0, int l0) {
    std::vector<WeylOp> ximg, dimg;
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i; j <= g.n; ++j) {
            std::size_t s = g.sp_index(i, j);
            long scale = (j <= g.n - 1) ? 2 : 1;
            ximg.push_back(WeylOp::derivative(g.zeta, g.params, s)
                               .scaled(g.rf(1 + (i == j)) / g.rf(2 * scale)));
            dimg.push_back(WeylOp::position(g.zeta, g.params, s)
                               .scaled(g.rf(((i == j) - 2) * scale)));
        }
    }
    return substitute_generators(sp_dpi_z_source(g, k0, l0), ximg, dimg);
}

// One gl-factor block: -( a d_k + sum_j zeta_j d_k d_j ) on the given slot range.
WeylOp uu_hat_block(const GeometrySpec& g, std::size_t base, int k, const RatFunc& a) {
    const std::size_t nv = g.zeta->size();
    WeylOp op(g.zeta, g.params);
    Mono beta(nv, 0);
    beta[base + static_cast<std::size_t>(k - 1)] = 1;
    op.add_term(Mono(nv, 0), beta, -a);
    for (int j = 1; j <= g.n; ++j) {
        Mono alpha(nv, 0), b2(nv, 0);
        alpha[base + static_cast<std::size_t>(j - 1)] = 1;
        b2[base + static_cast<std::size_t>(k - 1)] += 1;
        b2[base + static_cast<std::size_t>(j - 1)] += 1;
        op.add_term(alpha, b2, -g.rf(1));
    }
    return op;
}

}  // namespace

WeylOp dpi_hat(const GeometrySpec& g, const std::string& gen) {
    switch (g.family) {
        case GeomFamily::SO: {
            if (gen.size() < 2 || gen[0] != 'C') unknown_gen(g, gen);
            int j = parse_index(gen, 1);
            if (j < 1 || j > g.n) unknown_gen(g, gen);
            return so_dpi_hat(g, j);
        }
        case GeomFamily::SP: {
            if (gen.size() < 3 || gen[0] != 'C') unknown_gen(g, gen);
            int k = gen[1] - '0';
            int l = gen[2] - '0';
            if (k < 1 || l < k || l > g.n) unknown_gen(g, gen);
            return sp_dpi_hat(g, k, l);
        }
        case GeomFamily::UU: {
            if (gen.rfind("Cpp", 0) == 0)
                return uu_hat_block(g, static_cast<std::size_t>(g.n), parse_index(gen, 3),
                                    g.uu_a2());
            if (gen.rfind("Cp", 0) == 0)
                return uu_hat_block(g, 0, parse_index(gen, 2), g.uu_a1());
            if (gen[0] == 'C' && gen.size() >= 2 && std::isdigit(gen[1])) {
                int k = parse_index(gen, 1);
                if (k < 1 || k > g.n) unknown_gen(g, gen);
                return uu_hat_block(g, 0, k, g.uu_a1()) +
                       uu_hat_block(g, static_cast<std::size_t>(g.n), k, g.uu_a2());
            }
            unknown_gen(g, gen);
        }
    }
    unknown_gen(g, gen);
}

WeylOp so_flat_action(const GeometrySpec& g, const std::string& gen, const RatFunc& mult,
                      VarCtxPtr vars) {
    const std::size_t nv = vars->size();
    const auto& par = g.params;
    auto one = RatFunc::constant(par, BigRat(1));
    if (gen.rfind("Cbar", 0) == 0) {
        int j = parse_index(gen, 4);
        if (j < 1 || static_cast<std::size_t>(j) > nv) unknown_gen(g, gen);
        return WeylOp::derivative(vars, par, static_cast<std::size_t>(j - 1));
    }
    if (gen == "H0") {
        return WeylOp::euler(vars, par) + WeylOp::identity(vars, par).scaled(mult);
    }
    if (gen[0] == 'M') {
        int i = gen[1] - '0';
        int j = gen[2] - '0';
        if (i < 1 || j <= i || static_cast<std::size_t>(j) > nv) unknown_gen(g, gen);
        WeylOp zi = WeylOp::position(vars, par, static_cast<std::size_t>(i - 1));
        WeylOp zj = WeylOp::position(vars, par, static_cast<std::size_t>(j - 1));
        WeylOp di = WeylOp::derivative(vars, par, static_cast<std::size_t>(i - 1));
        WeylOp dj = WeylOp::derivative(vars, par, static_cast<std::size_t>(j - 1));
        return compose(zi, dj) - compose(zj, di);
    }
    if (gen[0] == 'C') {
        int j = parse_index(gen, 1);
        if (j < 1 || static_cast<std::size_t>(j) > nv) unknown_gen(g, gen);
        WeylOp zj = WeylOp::position(vars, par, static_cast<std::size_t>(j - 1));
        WeylOp dj = WeylOp::derivative(vars, par, static_cast<std::size_t>(j - 1));
        Poly q = sum_of_squares(vars, par, 0, nv);
        WeylOp op = zj.scaled(-mult);
        op -= compose(zj, WeylOp::euler(vars, par));
        op += compose(WeylOp::multiplication(q), dj).scaled(one.scaled(BigRat(1, 2)));
        return op;
    }
    unknown_gen(g, gen);
}

namespace {

WeylOp sp_dpi_z_source(const GeometrySpec& g, int k0, int l0) {
    const std::size_t nv = g.zvars->size();
    RatMatrix c = sp_gen_matrix(g, k0, l0);
    RatFunc mu = -g.lambda() + g.rf(g.rho_shift());
    WeylOp op(g.zvars, g.params);
    // mu Trace(C Z): packed off-diagonal entries appear twice.
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i; j <= g.n; ++j) {
            const RatFunc& cij = c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (cij.is_zero()) continue;
            Mono alpha(nv, 0);
            alpha[g.sp_index(i, j)] = 1;
            op.add_term(alpha, Mono(nv, 0), mu * cij.scaled(BigRat(i == j ? 1 : 2)));
        }
    }
    // + sum_{i<=j} sum_{k,l} C_kl z_ik z_jl d_ij
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i; j <= g.n; ++j) {
            for (int k = 1; k <= g.n; ++k) {
                for (int l = 1; l <= g.n; ++l) {
                    const RatFunc& ckl =
                        c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
                    if (ckl.is_zero()) continue;
                    Mono alpha(nv, 0), beta(nv, 0);
                    alpha[g.sp_index(i, k)] += 1;
                    alpha[g.sp_index(j, l)] += 1;
                    beta[g.sp_index(i, j)] = 1;
                    op.add_term(alpha, beta, ckl);
                }
            }
        }
    }
    return op;
}

// z_k (E - m) on one factor block of the UU flat model.
WeylOp uu_flat_block(const GeometrySpec& g, std::size_t base, int k, const RatFunc& m,
                     VarCtxPtr vars) {
    WeylOp zk = WeylOp::position(vars, g.params, base + static_cast<std::size_t>(k - 1));
    WeylOp euler(vars, g.params);
    for (int j = 1; j <= g.n; ++j) {
        std::size_t s = base + static_cast<std::size_t>(j - 1);
        Mono e(vars->size(), 0);
        e[s] = 1;
        euler.add_term(e, e, g.rf(1));
    }
    return compose(zk, euler - WeylOp::identity(vars, g.params).scaled(m));
}

}  // namespace

WeylOp dpi_z(const GeometrySpec& g, const std::string& gen, GenRole role, int a) {
    switch (g.family) {
        case GeomFamily::SO: {
            if (role == GenRole::source) {
                RatFunc mu = -g.lambda() + g.rf(g.rho_shift());
                return so_flat_action(g, gen, mu, g.zvars);
            }
            // Subgeometry SO(n-1, 2) with parameter lambda + a.
            if (g.n < 3) throw std::invalid_argument("dpi_z: SO target requires n >= 3");
            VarCtxPtr sub = make_indexed_vars("z", static_cast<std::size_t>(g.n - 1), "z");
            RatFunc mu_t = -(g.lambda() + g.rf(a)) + g.rf(g.n - 1);
            if (gen[0] == 'C' && gen.rfind("Cbar", 0) != 0 && parse_index(gen, 1) >= g.n)
                unknown_gen(g, gen);
            return so_flat_action(g, gen, mu_t, sub);
        }
        case GeomFamily::SP: {
            if (role != GenRole::source)
                throw std::invalid_argument(
                    "dpi_z: SP target actions live on the highest-weight line; see the "
                    "reconstruction in the singular module");
            if (gen.size() < 3 || gen[0] != 'C') unknown_gen(g, gen);
            return sp_dpi_z_source(g, gen[1] - '0', gen[2] - '0');
        }
        case GeomFamily::UU: {
            if (role != GenRole::source)
                throw std::invalid_argument(
                    "dpi_z: UU target actions are assembled in the intertwining oracle");
            RatFunc mp = -g.lambda_p();           // uu_a1 = mp + n + 1
            RatFunc mpp = -g.lambda_pp() - g.rf(2);  // uu_a2 = mpp + n + 1
            if (gen.rfind("Cpp", 0) == 0)
                return uu_flat_block(g, static_cast<std::size_t>(g.n), parse_index(gen, 3),
                                     mpp, g.zvars);
            if (gen.rfind("Cp", 0) == 0)
                return uu_flat_block(g, 0, parse_index(gen, 2), mp, g.zvars);
            if (gen[0] == 'C' && gen.size() >= 2 && std::isdigit(gen[1])) {
                int k = parse_index(gen, 1);
                return uu_flat_block(g, 0, k, mp, g.zvars) +
                       uu_flat_block(g, static_cast<std::size_t>(g.n), k, mpp, g.zvars);
            }
            unknown_gen(g, gen);
        }
    }
    unknown_gen(g, gen);
}

RatMatrix gl_beta(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c,
                  const RatMatrix& d, const RatMatrix& x) {
    auto rows = [](const RatMatrix& m) { return m.size(); };
    auto cols = [](const RatMatrix& m) { return m.empty() ? 0 : m.front().size(); };
    const std::size_t p = rows(x), q = cols(x);
    if (rows(a) != p || cols(a) != p || rows(b) != p || cols(b) != q || rows(c) != q ||
        cols(c) != p || rows(d) != q || cols(d) != q)
        throw std::invalid_argument("gl_beta: block dimensions inconsistent");
    auto mul = [&](const RatMatrix& u, const RatMatrix& v) {
        RatMatrix r(rows(u), std::vector<RatFunc>(cols(v)));
        for (std::size_t i = 0; i < rows(u); ++i)
            for (std::size_t j = 0; j < cols(v); ++j) {
                RatFunc acc = u[0][0].ctx() ? RatFunc(u[0][0].ctx()) : RatFunc();
                for (std::size_t k = 0; k < cols(u); ++k) acc += u[i][k] * v[k][j];
                r[i][j] = acc;
            }
        return r;
    };
    RatMatrix r = mul(a, x);
    RatMatrix xcx = mul(x, mul(c, x));
    RatMatrix xd = mul(x, d);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) r[i][j] = r[i][j] + b[i][j] - xcx[i][j] - xd[i][j];
    return r;
}

Poly sum_of_squares(VarCtxPtr ctx, ParamCtxPtr params, std::size_t offset, std::size_t m) {
    Poly q(ctx, params);
    for (std::size_t k = 0; k < m; ++k) {
        Mono e(ctx->size(), 0);
        e[offset + k] = 2;
        q.set_coeff(e, RatFunc::constant(params, BigRat(1)));
    }
    return q;
}

std::string GeometrySpec::json() const {
    std::ostringstream os;
    auto strlist = [&](const std::vector<std::string>& v) {
        std::ostringstream s;
        s << "[";
        for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << "\"" << v[i] << "\"";
        s << "]";
        return s.str();
    };
    os << "{\"family\":\"" << family_name(family) << "\",\"n\":" << n << ",\"params\":"
       << strlist(params->names()) << ",\"zeta_vars\":" << strlist(zeta->names())
       << ",\"z_vars\":" << strlist(zvars->names()) << ",\"nplus\":" << strlist(nplus)
       << ",\"nplus_tau\":" << strlist(nplus_tau) << ",\"nplus_minus_tau\":"
       << strlist(nplus_minus_tau) << ",\"gtau\":" << strlist(gtau)
       << ",\"fiber_dim\":" << fiber_dim << "}";
    return os.str();
}

}  // namespace rcweyl
