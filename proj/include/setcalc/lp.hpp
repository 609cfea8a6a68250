#pragma once

#include "setcalc/numerics.hpp"

#include <optional>
#include <vector>

namespace setcalc {

/// A single linear inequality normal . x <= offset.
struct LinearConstraint {
    Vector normal;
    double offset = 0.0;
};

/// maximize objective . x subject to every constraint; x is free.
struct LinearProgram {
    Vector objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<Vector> optimizer;
    std::optional<double> optimum;

    bool optimal() const { return status == LpStatus::Optimal; }
};

/// Dense two-phase simplex with Bland's rule. Free variables are split into
/// positive and negative parts internally, so the reported optimizer is a
/// vertex of the feasible region whenever one exists.
///
/// Throws DimensionMismatch if a constraint normal does not match the
/// objective, BudgetExceeded if the pivot cap is hit.
LpOutcome solve_lp(const LinearProgram& lp, const ToleranceContext& ctx = default_tolerance());

/// Phase-1 only: does some x satisfy every constraint?
bool is_feasible(const std::vector<LinearConstraint>& constraints,
                 const ToleranceContext& ctx = default_tolerance());

/// Some point of R^dim satisfying every constraint, or nullopt when there is
/// none.
std::optional<Vector> feasible_point(const std::vector<LinearConstraint>& constraints,
                                     Eigen::Index dim,
                                     const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc
