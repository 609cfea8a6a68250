#pragma once

#include "setcalc/lp.hpp"
#include "setcalc/numerics.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace setcalc {

// ---------------------------------------------------------------------------
// Concrete set representations. Every type validates its parameters on
// construction and is immutable afterwards.
// ---------------------------------------------------------------------------

/// {x | a.x <= b}
class HalfSpace {
public:
    HalfSpace(Vector normal, double offset);

    const Vector& normal() const { return normal_; }
    double offset() const { return offset_; }
    Eigen::Index dim() const { return normal_.size(); }

    LinearConstraint as_constraint() const { return {normal_, offset_}; }

private:
    Vector normal_;
    double offset_;
};

/// {x | a.x = b}
class Hyperplane {
public:
    Hyperplane(Vector normal, double offset);

    const Vector& normal() const { return normal_; }
    double offset() const { return offset_; }
    Eigen::Index dim() const { return normal_.size(); }

private:
    Vector normal_;
    double offset_;
};

/// Axis-aligned box: x_i = c_i + xi_i r_i, xi_i in [-1, 1].
class Hyperrectangle {
public:
    Hyperrectangle(Vector center, Vector radius);

    const Vector& center() const { return center_; }
    const Vector& radius() const { return radius_; }
    Eigen::Index dim() const { return center_.size(); }

    Vector low() const { return center_ - radius_; }
    Vector high() const { return center_ + radius_; }

    static Hyperrectangle from_bounds(const Vector& low, const Vector& high);

private:
    Vector center_;
    Vector radius_;
};

/// Hypercube: a ball in the infinity norm.
class BallInf {
public:
    BallInf(Vector center, double radius);

    const Vector& center() const { return center_; }
    double radius() const { return radius_; }
    Eigen::Index dim() const { return center_.size(); }

    Hyperrectangle as_hyperrectangle() const;

private:
    Vector center_;
    double radius_;
};

/// [lo, hi] in R.
class Interval {
public:
    Interval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double center() const { return 0.5 * (lo_ + hi_); }
    double radius() const { return 0.5 * (hi_ - lo_); }
    Eigen::Index dim() const { return 1; }

    Hyperrectangle as_hyperrectangle() const;

private:
    double lo_;
    double hi_;
};

/// c + G xi, xi in [-1, 1]^m; generators are the columns of G.
class Zonotope {
public:
    Zonotope(Vector center, Matrix generators);

    const Vector& center() const { return center_; }
    const Matrix& generators() const { return generators_; }
    Eigen::Index dim() const { return center_.size(); }
    Eigen::Index num_generators() const { return generators_.cols(); }

private:
    Vector center_;
    Matrix generators_;
};

/// Finite intersection of half-spaces; possibly unbounded or empty.
class HPolyhedron {
public:
    HPolyhedron(std::vector<HalfSpace> constraints, Eigen::Index dim);
    explicit HPolyhedron(std::vector<HalfSpace> constraints);

    const std::vector<HalfSpace>& constraints() const { return constraints_; }
    Eigen::Index dim() const { return dim_; }

    std::vector<LinearConstraint> linear_constraints() const;

private:
    std::vector<HalfSpace> constraints_;
    Eigen::Index dim_;
};

enum class BoundednessCheck { Verify, Skip };

/// Bounded finite intersection of half-spaces (may still be empty).
class HPolytope {
public:
    /// Verify runs 2n support LPs and throws UnboundedError on failure; Skip
    /// is for callers that know the constraints are bounded.
    HPolytope(std::vector<HalfSpace> constraints, Eigen::Index dim,
              BoundednessCheck check = BoundednessCheck::Verify);
    explicit HPolytope(std::vector<HalfSpace> constraints,
                       BoundednessCheck check = BoundednessCheck::Verify);

    const std::vector<HalfSpace>& constraints() const { return constraints_; }
    Eigen::Index dim() const { return dim_; }

    std::vector<LinearConstraint> linear_constraints() const;

private:
    std::vector<HalfSpace> constraints_;
    Eigen::Index dim_;
};

/// Convex polygon in vertex representation.
///
/// The constructor takes arbitrary points and keeps their convex hull:
/// vertices are counter-clockwise, start at the lexicographically smallest
/// vertex, and contain neither duplicates nor collinear points. An empty
/// point list denotes the empty set.
class VPolygon {
public:
    explicit VPolygon(const std::vector<Vector>& points, const ToleranceContext& ctx = default_tolerance());

    const std::vector<Vector>& vertices() const { return vertices_; }
    Eigen::Index dim() const { return 2; }

private:
    std::vector<Vector> vertices_;
};

/// Convex hull of finitely many points in R^n. Duplicates are removed; in
/// dimension <= 2 only extreme points are kept.
class VPolytope {
public:
    VPolytope(const std::vector<Vector>& points, Eigen::Index dim, const ToleranceContext& ctx = default_tolerance());
    explicit VPolytope(const std::vector<Vector>& points, const ToleranceContext& ctx = default_tolerance());

    const std::vector<Vector>& vertices() const { return vertices_; }
    Eigen::Index dim() const { return dim_; }

private:
    std::vector<Vector> vertices_;
    Eigen::Index dim_;
};

using ConcreteSet =
    std::variant<HalfSpace, Hyperplane, Hyperrectangle, BallInf, Interval, Zonotope, HPolyhedron, HPolytope, VPolygon,
                 VPolytope>;

/// Name of the held representation, e.g. "BallInf".
std::string_view kind_name(const ConcreteSet& set);

/// True for Hyperrectangle, BallInf and Interval.
bool is_hyperrectangular(const ConcreteSet& set);

/// True for the hyperrectangular kinds and Zonotope.
bool is_zonotopic(const ConcreteSet& set);

/// Box view of a hyperrectangular set; throws UnsupportedOperation otherwise.
Hyperrectangle as_hyperrectangle(const ConcreteSet& set);

/// Zonotope view of a zonotopic set (zero-radius box axes are dropped).
Zonotope as_zonotope(const ConcreteSet& set);

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

Eigen::Index dim(const ConcreteSet& set);

/// rho(d, X) = max_{x in X} d.x. Returns +infinity when X is unbounded in
/// direction d. Throws EmptySetError for an empty set and DimensionMismatch
/// when dim(d) != dim(X).
double support_function(const Vector& direction, const ConcreteSet& set,
                        const ToleranceContext& ctx = default_tolerance());

/// A maximizer of d.x over X. Zero direction entries resolve to the +
/// side for boxes and zonotope generators. Throws UnboundedError when no
/// maximizer exists.
Vector support_vector(const Vector& direction, const ConcreteSet& set,
                      const ToleranceContext& ctx = default_tolerance());

bool membership(const Vector& point, const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Extreme points. Hyperrectangles list vertices with the first
/// coordinate toggling fastest, starting from c + r.
std::vector<Vector> vertices_list(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Half-spaces whose intersection equals the set.
std::vector<HalfSpace> constraints_list(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Volume of a hyperrectangular set.
double volume(const ConcreteSet& set);

/// k uniform rejection samples from the bounding box, all members of X.
std::vector<Vector> sample(const ConcreteSet& set, std::size_t count, std::uint64_t seed,
                           const ToleranceContext& ctx = default_tolerance());

bool is_bounded(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Some member of X; throws EmptySetError when X is empty.
Vector an_element(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Tightest axis-aligned box from 2n support queries; throws for
/// unbounded or empty sets.
Hyperrectangle bounding_box(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// Maximum number of zonotope generators for exhaustive vertex enumeration.
inline constexpr Eigen::Index kMaxEnumeratedGenerators = 16;

}  // namespace setcalc
