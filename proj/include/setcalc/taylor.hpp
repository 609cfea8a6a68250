#pragma once

#include "setcalc/sets.hpp"

#include <vector>

namespace setcalc::taylor {

/// Closed interval [lo, hi] with plain floating-point arithmetic.
struct Range {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const { return 0.5 * (lo + hi); }
    double rad() const { return 0.5 * (hi - lo); }
};

/// Horner-scheme interval extension of sum_k p_k t^k over J. Sound, not
/// tight (t^2 over [-1, 1] gives [-1, 1]).
Range interval_eval(const std::vector<double>& coefficients, Range j);

/// p(t) + I for t - x0 in D - x0, i.e. the polynomial is in the shifted
/// variable t - x0.
class TaylorModel1 {
public:
    TaylorModel1(std::vector<double> coefficients, Range remainder, double expansion_point, Range domain);

    const std::vector<double>& coefficients() const { return coefficients_; }
    Range remainder() const { return remainder_; }
    double expansion_point() const { return x0_; }
    Range domain() const { return domain_; }
    std::size_t degree() const { return coefficients_.size() - 1; }

    /// p(t - x0), without the remainder.
    double evaluate(double t) const;

private:
    std::vector<double> coefficients_;
    Range remainder_;
    double x0_;
    Range domain_;
};

/// Components sharing one expansion point and domain.
class TaylorModelVector {
public:
    explicit TaylorModelVector(std::vector<TaylorModel1> components);

    const std::vector<TaylorModel1>& components() const { return components_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(components_.size()); }
    Range domain() const { return components_.front().domain(); }
    double expansion_point() const { return components_.front().expansion_point(); }

private:
    std::vector<TaylorModel1> components_;
};

/// Zonotope enclosure: one generator shared by all components for the
/// linear part, one axis generator per component for remainder and
/// higher-order terms. Exact (up to rounding slack) for degree <= 1.
Zonotope tm_to_zonotope(const TaylorModelVector& v);

/// One zonotope per piece of an equal split of the domain.
std::vector<Zonotope> tm_to_zonotopes(const TaylorModelVector& v, int splits);

/// Componentwise interval evaluation plus remainder.
Hyperrectangle tm_to_box(const TaylorModelVector& v);

std::vector<Hyperrectangle> tm_to_boxes(const TaylorModelVector& v, int splits);

}  // namespace setcalc::taylor
