#pragma once

#include <vector>

#include "swlearn/errors.hpp"

namespace swlearn {

inline constexpr double kSolveTolerance = 1e-9;      // residual infinity-norm bound
inline constexpr double kRecoverTolerance = 1e-6;    // coefficient round-trip bound
inline constexpr double kConditionWarnThreshold = 1e12;

/// The linear system matching sample nodes to polynomial values: row t,
/// column j holds nodes[t]^(j+1), so the unknowns are the coefficients of
/// powers 1..m. Nonsingular whenever the nodes are distinct and nonzero.
struct VandermondeSystem {
    std::vector<double> nodes;  // m distinct nonzero sample points
    std::vector<double> rhs;    // m values, one per node

    /// Canonical system over the sample nodes 1..m.
    static VandermondeSystem canonical(int order, std::vector<double> rhs);

    int order() const { return static_cast<int>(nodes.size()); }
    std::vector<std::vector<double>> matrix() const;
};

struct VandermondeSolution {
    std::vector<double> coefficients;  // powers 1..m
    double residual_inf = 0.0;         // ||A x - b||_inf against the original system
    double condition_estimate = 0.0;   // 1-norm condition number of A
    bool ill_conditioned = false;      // condition_estimate > kConditionWarnThreshold
};

/// Direct solve by Gaussian elimination with partial pivoting. Throws Error
/// on a numerically singular pivot (cannot happen for canonical nodes) or a
/// residual above kSolveTolerance; an ill-conditioned system is flagged in
/// the result but still solved.
VandermondeSolution solve_vandermonde(const VandermondeSystem& sys);

} // namespace swlearn
