#pragma once

#include <vector>

#include "rcweyl/ratfunc.hpp"

namespace rcweyl {

// Exact kernel of a rows x cols matrix over the rational-function field.
// Deterministic: Gaussian elimination with first-nonzero pivoting, basis
// vectors normalized to 1 at their free column.
std::vector<std::vector<RatFunc>> nullspace(const std::vector<std::vector<RatFunc>>& m,
                                            std::size_t cols, ParamCtxPtr params);

// Solve m x = rhs exactly; nullopt if inconsistent. When the solution is not
// unique the free variables are set to zero.
std::optional<std::vector<RatFunc>> solve_linear(std::vector<std::vector<RatFunc>> m,
                                                 std::vector<RatFunc> rhs,
                                                 std::size_t cols, ParamCtxPtr params);

}  // namespace rcweyl
