#pragma once

// Planar (2-D) geometry kernels shared by the polygon code paths.

#include "setcalc/lp.hpp"
#include "setcalc/numerics.hpp"

#include <vector>

namespace setcalc::planar {

/// z-component of (a - o) x (b - o); positive for a left turn.
inline double cross(const Vector& o, const Vector& a, const Vector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain. Output is counter-clockwise starting at the
/// lexicographically smallest point, with duplicates and points within atol
/// of a hull edge's supporting line dropped.
std::vector<Vector> convex_hull(std::vector<Vector> points, const ToleranceContext& ctx = default_tolerance());

/// Signed area of a counter-clockwise polygon.
double area(const std::vector<Vector>& ccw);

/// Outward edge normals of a counter-clockwise convex polygon, one
/// constraint per edge. Polygons with fewer than 3 vertices get a
/// degenerate description (segment: 4 constraints, point: 4 axis
/// constraints, empty: a contradictory pair).
std::vector<LinearConstraint> edge_constraints(const std::vector<Vector>& ccw);

/// Vertices of the bounded planar polyhedron given by the constraints:
/// pairwise line intersections that satisfy every constraint within atol,
/// reduced to their convex hull. Empty if the system is infeasible. The
/// caller is responsible for boundedness.
std::vector<Vector> halfplane_vertices(const std::vector<LinearConstraint>& constraints,
                                       const ToleranceContext& ctx = default_tolerance());

/// Point-in-convex-polygon test with tolerance.
bool contains(const std::vector<Vector>& ccw, const Vector& point, const ToleranceContext& ctx = default_tolerance());

/// Minkowski sum of two convex counter-clockwise polygons by merging their
/// edge sequences in angular order.
std::vector<Vector> minkowski_sum(const std::vector<Vector>& p, const std::vector<Vector>& q,
                                  const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc::planar
