#include "rcweyl/linalg.hpp"

namespace rcweyl {

namespace {

// Row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> echelonize(std::vector<std::vector<RatFunc>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        RatFunc inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RatFunc f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<RatFunc>> nullspace(const std::vector<std::vector<RatFunc>>& min,
                                            std::size_t cols, ParamCtxPtr params) {
    std::vector<std::vector<RatFunc>> m = min;
    for (auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
    std::vector<std::size_t> pivots = echelonize(m, cols);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<RatFunc>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RatFunc> v(cols, RatFunc(params));
        v[free] = RatFunc::constant(params, BigRat(1));
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<RatFunc>> solve_linear(std::vector<std::vector<RatFunc>> m,
                                                 std::vector<RatFunc> rhs,
                                                 std::size_t cols, ParamCtxPtr params) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
        m[r].push_back(rhs[r]);
    }
    std::vector<std::size_t> pivots = echelonize(m, cols + 1);
    // A pivot in the augmented column signals inconsistency.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<RatFunc> x(cols, RatFunc(params));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

}  // namespace rcweyl
