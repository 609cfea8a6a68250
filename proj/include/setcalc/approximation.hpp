#pragma once

#include "setcalc/lazy.hpp"

#include <vector>

namespace setcalc {

enum class TemplateKind { Box, Oct, Polar, Spherical, Custom };

/// A named family of support directions.
class DirectionTemplate {
public:
    /// +-e_i for every axis: e1, -e1, e2, -e2, ...
    static DirectionTemplate box(Eigen::Index n);
    /// The 8 unit octagon normals in R^2, counter-clockwise from (1, 0).
    static DirectionTemplate oct(Eigen::Index n = 2);
    /// k unit vectors at angles 2 pi j / k, starting at (1, 0).
    static DirectionTemplate polar(int k);
    /// k x k latitude/longitude grid on the unit sphere in R^3.
    static DirectionTemplate spherical(int k);
    static DirectionTemplate custom(std::vector<Vector> directions);

    TemplateKind kind() const { return kind_; }
    Eigen::Index dim() const { return dim_; }
    /// k for Polar / Spherical, 0 otherwise.
    int resolution() const { return resolution_; }

    const std::vector<Vector>& directions() const { return directions_; }

private:
    DirectionTemplate(TemplateKind kind, Eigen::Index dim, int resolution, std::vector<Vector> directions);

    TemplateKind kind_;
    Eigen::Index dim_;
    int resolution_;
    std::vector<Vector> directions_;
};

std::vector<Vector> generate_directions(const DirectionTemplate& t);

struct ApproximationError {
    double hausdorff_bound = 0.0;
};

/// Intersection of {d.x <= rho(d, X)} over the template. An HPolytope when
/// the result is bounded, an HPolyhedron otherwise (directions along which
/// X is unbounded contribute no constraint).
ConcreteSet overapproximate_template(const SetExpr& x, const DirectionTemplate& t,
                                     const ToleranceContext& ctx = default_tolerance());

/// Tightest axis-aligned box. Throws UnboundedError for unbounded X.
Hyperrectangle box_approximation(const SetExpr& x, const ToleranceContext& ctx = default_tolerance());

/// Smallest origin-centred box containing X.
Hyperrectangle symmetric_interval_hull(const SetExpr& x, const ToleranceContext& ctx = default_tolerance());

struct EpsApproximation {
    VPolygon polygon;
    ApproximationError error;
};

/// Outer polygon within Hausdorff distance eps of a compact 2-D set
/// (Kamenev-style bisection of the support directions).
EpsApproximation overapproximate_eps_2d(const SetExpr& x, double eps,
                                        const ToleranceContext& ctx = default_tolerance());

/// Upper bound on the number of direction bisections.
inline constexpr std::size_t kMaxEpsRefinements = 10000;

/// Zonotope with generators alpha_j d_j containing X; alpha minimizes the
/// sum of the scalings. The center is the vertex centroid of X.
Zonotope overapproximate_zonotope(const SetExpr& x, const std::vector<Vector>& directions,
                                  const ToleranceContext& ctx = default_tolerance());

/// Convex hull of the support vectors of X along the given directions.
VPolytope underapproximate(const SetExpr& x, const std::vector<Vector>& directions,
                           const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc
