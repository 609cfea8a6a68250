#pragma once

#include "setcalc/lazy.hpp"
#include "setcalc/sets.hpp"

namespace setcalc {

// Eager set operations. Each supports a fixed list of representation pairs
// and throws UnsupportedOperation otherwise; the lazy node of the same name
// is the fallback.

/// Boxes add center and radius, zonotopic pairs concatenate generators,
/// 2-D polytopes merge their edge sequences.
ConcreteSet minkowski_sum(const ConcreteSet& x, const ConcreteSet& y, const ToleranceContext& ctx = default_tolerance());

struct IntersectionOptions {
    /// Drop constraints that are redundant (one LP per constraint).
    bool prune_redundant = false;
};

/// Half-space/polyhedral pairs concatenate constraints, boxes meet
/// interval-wise, half-space with box gives a polygon in 2-D and an
/// HPolytope otherwise. An empty intersection is returned as a polyhedron
/// for which is_empty() holds.
ConcreteSet intersection(const ConcreteSet& x, const ConcreteSet& y, IntersectionOptions options = {},
                         const ToleranceContext& ctx = default_tolerance());

/// The n-vector with `value` at `index` (0-based) and zeros elsewhere.
class SingleEntryVector {
public:
    SingleEntryVector(Eigen::Index index, Eigen::Index length, double value);

    Eigen::Index index() const { return index_; }
    Eigen::Index length() const { return length_; }
    double value() const { return value_; }

    Vector dense() const;

private:
    Eigen::Index index_;
    Eigen::Index length_;
    double value_;
};

/// Axis-aligned half-space {x | value * x[index] <= offset}.
struct AxisHalfSpace {
    SingleEntryVector normal;
    double offset;

    HalfSpace to_halfspace() const { return {normal.dense(), offset}; }
};

/// Clamp one interval of the box. Returns the clamped Hyperrectangle, or an
/// empty HPolyhedron when the clamp leaves nothing.
ConcreteSet intersection_fastpath(const Hyperrectangle& box, const AxisHalfSpace& halfspace,
                                  const ToleranceContext& ctx = default_tolerance());

/// Boxes give boxes, zonotopic pairs give a block-diagonal zonotope.
ConcreteSet cartesian_product(const ConcreteSet& x, const ConcreteSet& y);

/// Convex hull of the union of two 2-D polytopes.
VPolygon convex_hull_union(const ConcreteSet& x, const ConcreteSet& y, const ToleranceContext& ctx = default_tolerance());

/// {Mx | x in X}.
ConcreteSet linear_map(const Matrix& m, const ConcreteSet& x, const ToleranceContext& ctx = default_tolerance());

/// {x + v | x in X}; keeps the representation.
ConcreteSet translate(const ConcreteSet& x, const Vector& v);

// Predicates -----------------------------------------------------------------

bool is_empty(const ConcreteSet& x, const ToleranceContext& ctx = default_tolerance());

/// X subset of Y: rho(a, X) <= b (within atol) for every constraint of Y.
/// Lazy Y is concretized first; Y without a constraint list is unsupported.
/// An empty X is a subset of everything.
bool is_subset(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx = default_tolerance());

/// Closed-set semantics: touching sets are not disjoint.
bool is_disjoint(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx = default_tolerance());

/// Mutual inclusion.
bool is_equivalent(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc
