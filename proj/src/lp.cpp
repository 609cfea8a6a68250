#include "setcalc/lp.hpp"

#include "setcalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace setcalc {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-10;

// Standard-form tableau for  A u - A w + s (+ art) = b,  all variables >= 0.
// Column layout: [u (n) | w (n) | s (m) | art (k) | rhs].
class Tableau {
public:
    Tableau(const std::vector<LinearConstraint>& constraints, Eigen::Index n)
        : m_(static_cast<Eigen::Index>(constraints.size())), n_(n) {
        Eigen::Index n_art = 0;
        for (const auto& c : constraints) {
            if (c.offset < 0.0) {
                ++n_art;
            }
        }
        art_begin_ = 2 * n_ + m_;
        cols_ = art_begin_ + n_art;
        t_ = Matrix::Zero(m_ + 1, cols_ + 1);
        basis_.resize(static_cast<std::size_t>(m_));

        Eigen::Index next_art = art_begin_;
        for (Eigen::Index i = 0; i < m_; ++i) {
            const auto& c = constraints[static_cast<std::size_t>(i)];
            const double sign = c.offset < 0.0 ? -1.0 : 1.0;
            t_.row(i).segment(0, n_) = sign * c.normal.transpose();
            t_.row(i).segment(n_, n_) = -sign * c.normal.transpose();
            t_(i, 2 * n_ + i) = sign;
            t_(i, cols_) = sign * c.offset;
            if (c.offset < 0.0) {
                t_(i, next_art) = 1.0;
                basis_[static_cast<std::size_t>(i)] = next_art++;
            } else {
                basis_[static_cast<std::size_t>(i)] = 2 * n_ + i;
            }
        }
        original_ = t_.topRows(m_);
    }

    bool has_artificials() const { return cols_ > art_begin_; }

    // Phase 1: maximize -sum(art). Returns the infeasibility (sum of art).
    double phase_one(std::size_t& pivots, std::size_t cap) {
        t_.row(m_).setZero();
        for (Eigen::Index j = art_begin_; j < cols_; ++j) {
            t_(m_, j) = 1.0;
        }
        price_out();
        run(cols_, pivots, cap);
        return t_(m_, cols_);
    }

    // Pivot remaining artificial variables out of the basis where possible.
    void drive_out_artificials() {
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] < art_begin_) {
                continue;
            }
            for (Eigen::Index j = 0; j < art_begin_; ++j) {
                if (std::abs(t_(i, j)) > kPivotEps) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2 on objective c. Returns false when unbounded.
    bool phase_two(const Vector& c, std::size_t& pivots, std::size_t cap) {
        t_.row(m_).setZero();
        t_.row(m_).segment(0, n_) = -c.transpose();
        t_.row(m_).segment(n_, n_) = c.transpose();
        price_out();
        return run(art_begin_, pivots, cap);
    }

    Vector primal() const {
        Vector values = Vector::Zero(cols_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            values[basis_[static_cast<std::size_t>(i)]] = t_(i, cols_);
        }
        refine(values);
        return values.segment(0, n_) - values.segment(n_, n_);
    }

private:
    void price_out() {
        for (Eigen::Index i = 0; i < m_; ++i) {
            const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
            const double coef = t_(m_, b);
            if (coef != 0.0) {
                t_.row(m_) -= coef * t_.row(i);
            }
        }
    }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index i = 0; i <= m_; ++i) {
            if (i == row) {
                continue;
            }
            const double f = t_(i, col);
            if (f != 0.0) {
                t_.row(i) -= f * t_.row(row);
                t_(i, col) = 0.0;
            }
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    // Bland's rule. Columns >= col_limit never enter. Returns false on
    // unboundedness.
    bool run(Eigen::Index col_limit, std::size_t& pivots, std::size_t cap) {
        while (true) {
            Eigen::Index entering = -1;
            for (Eigen::Index j = 0; j < col_limit; ++j) {
                if (t_(m_, j) < -kCostEps) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) {
                return true;
            }
            Eigen::Index leaving = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i) {
                const double a = t_(i, entering);
                if (a <= kPivotEps) {
                    continue;
                }
                const double ratio = std::max(t_(i, cols_), 0.0) / a;
                if (leaving < 0 || ratio < best_ratio - 1e-14) {
                    best_ratio = ratio;
                    leaving = i;
                } else if (ratio <= best_ratio + 1e-14 &&
                           basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)]) {
                    leaving = i;
                }
            }
            if (leaving < 0) {
                return false;
            }
            if (++pivots > cap) {
                throw BudgetExceeded("simplex pivot limit exceeded");
            }
            pivot(leaving, entering);
        }
    }

    // Recompute the basic solution from the untouched constraint matrix to
    // wash out accumulated pivoting error.
    void refine(Vector& values) const {
        if (m_ == 0) {
            return;
        }
        Matrix basis_cols(m_, m_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
            if (b >= art_begin_) {
                return;
            }
            basis_cols.col(i) = original_.col(b);
        }
        Eigen::FullPivLU<Matrix> lu(basis_cols);
        if (!lu.isInvertible()) {
            return;
        }
        const Vector rhs = original_.col(cols_);
        const Vector xb = lu.solve(rhs);
        if (!xb.allFinite() || (basis_cols * xb - rhs).cwiseAbs().maxCoeff() > 1e-9) {
            return;
        }
        for (Eigen::Index i = 0; i < m_; ++i) {
            values[basis_[static_cast<std::size_t>(i)]] = std::max(xb[i], 0.0);
        }
    }

    Eigen::Index m_;
    Eigen::Index n_;
    Eigen::Index art_begin_ = 0;
    Eigen::Index cols_ = 0;
    Matrix t_;
    Matrix original_;
    std::vector<Eigen::Index> basis_;
};

void check_dimensions(const std::vector<LinearConstraint>& constraints, Eigen::Index n) {
    for (const auto& c : constraints) {
        if (c.normal.size() != n) {
            throw DimensionMismatch("constraint normal has dimension " + std::to_string(c.normal.size()) +
                                    ", expected " + std::to_string(n));
        }
        if (!c.normal.allFinite() || std::isnan(c.offset)) {
            throw InvalidArgument("constraint has non-finite coefficients");
        }
    }
}

double infeasibility_tolerance(const std::vector<LinearConstraint>& constraints, const ToleranceContext& ctx) {
    double scale = 1.0;
    for (const auto& c : constraints) {
        scale = std::max(scale, std::abs(c.offset));
    }
    return ctx.atol() * scale;
}

std::size_t pivot_cap(const std::vector<LinearConstraint>& constraints, Eigen::Index n) {
    return 1000 + 50 * (constraints.size() + 2 * static_cast<std::size_t>(n));
}

// +inf offsets are vacuous; -inf offsets make the system infeasible.
std::vector<LinearConstraint> finite_part(const std::vector<LinearConstraint>& constraints, bool& contradictory) {
    std::vector<LinearConstraint> out;
    out.reserve(constraints.size());
    contradictory = false;
    for (const auto& c : constraints) {
        if (c.offset == std::numeric_limits<double>::infinity()) {
            continue;
        }
        if (c.offset == -std::numeric_limits<double>::infinity()) {
            contradictory = true;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp, const ToleranceContext& ctx) {
    const Eigen::Index n = lp.objective.size();
    if (n < 1) {
        throw InvalidArgument("linear program needs at least one variable");
    }
    check_dimensions(lp.constraints, n);
    bool contradictory = false;
    const auto constraints = finite_part(lp.constraints, contradictory);
    if (contradictory) {
        return {LpStatus::Infeasible, std::nullopt, std::nullopt};
    }

    if (constraints.empty()) {
        if (lp.objective.isZero(0.0)) {
            return {LpStatus::Optimal, Vector::Zero(n), 0.0};
        }
        return {LpStatus::Unbounded, std::nullopt, std::nullopt};
    }

    Tableau tab(constraints, n);
    std::size_t pivots = 0;
    const std::size_t cap = pivot_cap(constraints, n);
    if (tab.has_artificials()) {
        const double infeasibility = -tab.phase_one(pivots, cap);
        if (infeasibility > infeasibility_tolerance(constraints, ctx)) {
            return {LpStatus::Infeasible, std::nullopt, std::nullopt};
        }
        tab.drive_out_artificials();
    }
    if (!tab.phase_two(lp.objective, pivots, cap)) {
        return {LpStatus::Unbounded, std::nullopt, std::nullopt};
    }
    Vector x = tab.primal();
    const double value = lp.objective.dot(x);
    return {LpStatus::Optimal, std::move(x), value};
}

std::optional<Vector> feasible_point(const std::vector<LinearConstraint>& constraints, Eigen::Index dim,
                                     const ToleranceContext& ctx) {
    check_dimensions(constraints, dim);
    bool contradictory = false;
    const auto finite = finite_part(constraints, contradictory);
    if (contradictory) {
        return std::nullopt;
    }
    if (finite.empty()) {
        return Vector::Zero(dim);
    }
    Tableau tab(finite, dim);
    std::size_t pivots = 0;
    if (tab.has_artificials()) {
        const double infeasibility = -tab.phase_one(pivots, pivot_cap(finite, dim));
        if (infeasibility > infeasibility_tolerance(finite, ctx)) {
            return std::nullopt;
        }
        tab.drive_out_artificials();
    }
    return tab.primal();
}

bool is_feasible(const std::vector<LinearConstraint>& constraints, const ToleranceContext& ctx) {
    if (constraints.empty()) {
        return true;
    }
    return feasible_point(constraints, constraints.front().normal.size(), ctx).has_value();
}

}  // namespace setcalc
