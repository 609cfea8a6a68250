#include "setcalc/concrete_ops.hpp"

#include "setcalc/errors.hpp"
#include "setcalc/planar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace setcalc {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void require_same_dim(const ConcreteSet& x, const ConcreteSet& y, const char* what) {
    if (dim(x) != dim(y)) {
        throw DimensionMismatch(std::string(what) + ": operand dimensions " + std::to_string(dim(x)) + " and " +
                                std::to_string(dim(y)) + " do not match");
    }
}

[[noreturn]] void unsupported_pair(const char* what, const ConcreteSet& x, const ConcreteSet& y) {
    throw UnsupportedOperation(std::string(what) + " is not implemented for " + std::string(kind_name(x)) + " and " +
                               std::string(kind_name(y)) + "; use the lazy operation instead");
}

bool is_polyhedral(const ConcreteSet& x) {
    return std::holds_alternative<HalfSpace>(x) || std::holds_alternative<Hyperplane>(x) ||
           std::holds_alternative<HPolyhedron>(x) || std::holds_alternative<HPolytope>(x) || is_hyperrectangular(x);
}

bool is_bounded_polyhedral(const ConcreteSet& x) {
    return std::holds_alternative<HPolytope>(x) || is_hyperrectangular(x);
}

// Bounded 2-D sets whose vertices can be listed directly.
bool is_planar_polytope(const ConcreteSet& x) {
    if (dim(x) != 2) {
        return false;
    }
    return is_zonotopic(x) || std::holds_alternative<VPolygon>(x) || std::holds_alternative<VPolytope>(x) ||
           std::holds_alternative<HPolytope>(x);
}

std::vector<HalfSpace> box_constraints(const Hyperrectangle& box) { return constraints_list(box); }

HPolyhedron empty_polyhedron(std::vector<HalfSpace> a, const std::vector<HalfSpace>& b, Eigen::Index n) {
    a.insert(a.end(), b.begin(), b.end());
    return HPolyhedron(std::move(a), n);
}

std::vector<HalfSpace> prune(std::vector<HalfSpace> constraints, Eigen::Index n, const ToleranceContext& ctx) {
    std::size_t i = 0;
    while (i < constraints.size() && constraints.size() > 1) {
        std::vector<LinearConstraint> others;
        others.reserve(constraints.size() - 1);
        for (std::size_t j = 0; j < constraints.size(); ++j) {
            if (j != i) {
                others.push_back(constraints[j].as_constraint());
            }
        }
        const LpOutcome out = solve_lp({constraints[i].normal(), std::move(others)}, ctx);
        if (out.status == LpStatus::Infeasible) {
            // The rest already contradict each other; nothing is redundant in
            // a meaningful sense, keep the list as is.
            return constraints;
        }
        const double slack = ctx.atol() * std::max(1.0, constraints[i].normal().norm());
        if (out.optimal() && *out.optimum <= constraints[i].offset() + slack) {
            constraints.erase(constraints.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    (void)n;
    return constraints;
}

}  // namespace

// ---------------------------------------------------------------------------
// Minkowski sum
// ---------------------------------------------------------------------------

ConcreteSet minkowski_sum(const ConcreteSet& x, const ConcreteSet& y, const ToleranceContext& ctx) {
    require_same_dim(x, y, "minkowski_sum");
    if (is_hyperrectangular(x) && is_hyperrectangular(y)) {
        const Hyperrectangle a = as_hyperrectangle(x);
        const Hyperrectangle b = as_hyperrectangle(y);
        return Hyperrectangle(a.center() + b.center(), a.radius() + b.radius());
    }
    if (is_zonotopic(x) && is_zonotopic(y)) {
        const Zonotope a = as_zonotope(x);
        const Zonotope b = as_zonotope(y);
        Matrix g(a.dim(), a.num_generators() + b.num_generators());
        g << a.generators(), b.generators();
        return Zonotope(a.center() + b.center(), std::move(g));
    }
    if (is_planar_polytope(x) && is_planar_polytope(y)) {
        const VPolygon a(vertices_list(x, ctx), ctx);
        const VPolygon b(vertices_list(y, ctx), ctx);
        return VPolygon(planar::minkowski_sum(a.vertices(), b.vertices(), ctx), ctx);
    }
    unsupported_pair("minkowski_sum", x, y);
}

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

ConcreteSet intersection(const ConcreteSet& x, const ConcreteSet& y, IntersectionOptions options,
                         const ToleranceContext& ctx) {
    require_same_dim(x, y, "intersection");
    const Eigen::Index n = dim(x);

    if (is_hyperrectangular(x) && is_hyperrectangular(y)) {
        const Hyperrectangle a = as_hyperrectangle(x);
        const Hyperrectangle b = as_hyperrectangle(y);
        const Vector lo = a.low().cwiseMax(b.low());
        Vector hi = a.high().cwiseMin(b.high());
        for (Eigen::Index i = 0; i < n; ++i) {
            if (hi[i] < lo[i] - ctx.atol()) {
                return empty_polyhedron(box_constraints(a), box_constraints(b), n);
            }
            hi[i] = std::max(hi[i], lo[i]);
        }
        return Hyperrectangle::from_bounds(lo, hi);
    }

    const HalfSpace* hs = std::get_if<HalfSpace>(&x);
    const ConcreteSet* other = &y;
    if (hs == nullptr) {
        hs = std::get_if<HalfSpace>(&y);
        other = &x;
    }
    if (hs != nullptr && is_hyperrectangular(*other)) {
        std::vector<HalfSpace> constraints = box_constraints(as_hyperrectangle(*other));
        constraints.push_back(*hs);
        if (n == 2) {
            std::vector<LinearConstraint> lin;
            for (const auto& h : constraints) {
                lin.push_back(h.as_constraint());
            }
            return VPolygon(planar::halfplane_vertices(lin, ctx), ctx);
        }
        return HPolytope(std::move(constraints), n, BoundednessCheck::Skip);
    }

    if (is_polyhedral(x) && is_polyhedral(y)) {
        std::vector<HalfSpace> constraints = constraints_list(x, ctx);
        const std::vector<HalfSpace> more = constraints_list(y, ctx);
        constraints.insert(constraints.end(), more.begin(), more.end());
        if (options.prune_redundant) {
            constraints = prune(std::move(constraints), n, ctx);
        }
        if (is_bounded_polyhedral(x) || is_bounded_polyhedral(y)) {
            return HPolytope(std::move(constraints), n, BoundednessCheck::Skip);
        }
        return HPolyhedron(std::move(constraints), n);
    }
    unsupported_pair("intersection", x, y);
}

SingleEntryVector::SingleEntryVector(Eigen::Index index, Eigen::Index length, double value)
    : index_(index), length_(length), value_(value) {
    if (length < 1 || index < 0 || index >= length) {
        throw InvalidArgument("single-entry vector index " + std::to_string(index) + " out of range for length " +
                              std::to_string(length));
    }
    if (value == 0.0 || !std::isfinite(value)) {
        throw InvalidArgument("single-entry vector needs a finite nonzero value");
    }
}

Vector SingleEntryVector::dense() const {
    Vector v = Vector::Zero(length_);
    v[index_] = value_;
    return v;
}

ConcreteSet intersection_fastpath(const Hyperrectangle& box, const AxisHalfSpace& halfspace,
                                  const ToleranceContext& ctx) {
    const SingleEntryVector& a = halfspace.normal;
    if (a.length() != box.dim()) {
        throw DimensionMismatch("half-space has dimension " + std::to_string(a.length()) + " but the box has " +
                                std::to_string(box.dim()));
    }
    const Eigen::Index i = a.index();
    const double bound = halfspace.offset / a.value();
    Vector lo = box.low();
    Vector hi = box.high();
    if (a.value() > 0.0) {
        hi[i] = std::min(hi[i], bound);
    } else {
        lo[i] = std::max(lo[i], bound);
    }
    if (hi[i] < lo[i] - ctx.atol()) {
        std::vector<HalfSpace> constraints = box_constraints(box);
        constraints.push_back(halfspace.to_halfspace());
        return HPolyhedron(std::move(constraints), box.dim());
    }
    hi[i] = std::max(hi[i], lo[i]);
    return Hyperrectangle::from_bounds(lo, hi);
}

// ---------------------------------------------------------------------------
// Products, hulls, maps
// ---------------------------------------------------------------------------

ConcreteSet cartesian_product(const ConcreteSet& x, const ConcreteSet& y) {
    if (is_hyperrectangular(x) && is_hyperrectangular(y)) {
        const Hyperrectangle a = as_hyperrectangle(x);
        const Hyperrectangle b = as_hyperrectangle(y);
        return Hyperrectangle(concat(a.center(), b.center()), concat(a.radius(), b.radius()));
    }
    if (is_zonotopic(x) && is_zonotopic(y)) {
        const Zonotope a = as_zonotope(x);
        const Zonotope b = as_zonotope(y);
        Matrix g = Matrix::Zero(a.dim() + b.dim(), a.num_generators() + b.num_generators());
        g.topLeftCorner(a.dim(), a.num_generators()) = a.generators();
        g.bottomRightCorner(b.dim(), b.num_generators()) = b.generators();
        return Zonotope(concat(a.center(), b.center()), std::move(g));
    }
    unsupported_pair("cartesian_product", x, y);
}

VPolygon convex_hull_union(const ConcreteSet& x, const ConcreteSet& y, const ToleranceContext& ctx) {
    require_same_dim(x, y, "convex_hull_union");
    if (dim(x) != 2) {
        throw UnsupportedOperation("concrete convex hull is only implemented in dimension 2");
    }
    auto points_of = [&](const ConcreteSet& s) {
        if (std::holds_alternative<HalfSpace>(s) || std::holds_alternative<Hyperplane>(s)) {
            throw UnsupportedOperation("convex hull of an unbounded " + std::string(kind_name(s)));
        }
        if (std::holds_alternative<HPolyhedron>(s) && !is_bounded(s, ctx)) {
            throw UnboundedError("convex hull of an unbounded polyhedron");
        }
        return vertices_list(s, ctx);
    };
    std::vector<Vector> points = points_of(x);
    const std::vector<Vector> more = points_of(y);
    points.insert(points.end(), more.begin(), more.end());
    return VPolygon(points, ctx);
}

ConcreteSet linear_map(const Matrix& m, const ConcreteSet& x, const ToleranceContext& ctx) {
    if (m.cols() != dim(x)) {
        throw DimensionMismatch("linear_map: matrix has " + std::to_string(m.cols()) +
                                " columns but the set has dimension " + std::to_string(dim(x)));
    }
    if (is_zonotopic(x)) {
        const Zonotope z = as_zonotope(x);
        return Zonotope(m * z.center(), m * z.generators());
    }
    auto map_points = [&](const std::vector<Vector>& points) -> ConcreteSet {
        std::vector<Vector> mapped;
        mapped.reserve(points.size());
        for (const auto& p : points) {
            mapped.push_back(m * p);
        }
        if (m.rows() == 2) {
            return VPolygon(mapped, ctx);
        }
        return VPolytope(mapped, m.rows(), ctx);
    };
    if (const auto* p = std::get_if<VPolygon>(&x)) {
        return map_points(p->vertices());
    }
    if (const auto* p = std::get_if<VPolytope>(&x)) {
        return map_points(p->vertices());
    }

    // H-representations: a.x <= b with x = M^-1 y becomes (M^-T a).y <= b.
    if (m.rows() != m.cols()) {
        throw UnsupportedOperation("linear_map of an H-representation needs a square invertible matrix");
    }
    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible()) {
        throw UnsupportedOperation("linear_map of an H-representation with a singular matrix is not supported");
    }
    const Matrix inv_t = lu.inverse().transpose();
    auto map_constraints = [&](const std::vector<HalfSpace>& constraints) {
        std::vector<HalfSpace> out;
        out.reserve(constraints.size());
        for (const auto& h : constraints) {
            out.emplace_back(inv_t * h.normal(), h.offset());
        }
        return out;
    };
    return std::visit(overloaded{
                          [&](const HalfSpace& h) -> ConcreteSet { return HalfSpace(inv_t * h.normal(), h.offset()); },
                          [&](const Hyperplane& h) -> ConcreteSet {
                              return Hyperplane(inv_t * h.normal(), h.offset());
                          },
                          [&](const HPolyhedron& p) -> ConcreteSet {
                              return HPolyhedron(map_constraints(p.constraints()), p.dim());
                          },
                          [&](const HPolytope& p) -> ConcreteSet {
                              return HPolytope(map_constraints(p.constraints()), p.dim(), BoundednessCheck::Skip);
                          },
                          [&](const auto&) -> ConcreteSet {
                              throw UnsupportedOperation("linear_map is not implemented for " +
                                                         std::string(kind_name(x)));
                          },
                      },
                      x);
}

ConcreteSet translate(const ConcreteSet& x, const Vector& v) {
    if (v.size() != dim(x)) {
        throw DimensionMismatch("translate: vector has dimension " + std::to_string(v.size()) +
                                " but the set has dimension " + std::to_string(dim(x)));
    }
    auto shift_constraints = [&](const std::vector<HalfSpace>& constraints) {
        std::vector<HalfSpace> out;
        out.reserve(constraints.size());
        for (const auto& h : constraints) {
            out.emplace_back(h.normal(), h.offset() + h.normal().dot(v));
        }
        return out;
    };
    auto shift_points = [&](const std::vector<Vector>& points) {
        std::vector<Vector> out;
        out.reserve(points.size());
        for (const auto& p : points) {
            out.push_back(p + v);
        }
        return out;
    };
    return std::visit(overloaded{
                          [&](const HalfSpace& h) -> ConcreteSet {
                              return HalfSpace(h.normal(), h.offset() + h.normal().dot(v));
                          },
                          [&](const Hyperplane& h) -> ConcreteSet {
                              return Hyperplane(h.normal(), h.offset() + h.normal().dot(v));
                          },
                          [&](const Hyperrectangle& h) -> ConcreteSet {
                              return Hyperrectangle(h.center() + v, h.radius());
                          },
                          [&](const BallInf& b) -> ConcreteSet { return BallInf(b.center() + v, b.radius()); },
                          [&](const Interval& i) -> ConcreteSet { return Interval(i.lo() + v[0], i.hi() + v[0]); },
                          [&](const Zonotope& z) -> ConcreteSet { return Zonotope(z.center() + v, z.generators()); },
                          [&](const HPolyhedron& p) -> ConcreteSet {
                              return HPolyhedron(shift_constraints(p.constraints()), p.dim());
                          },
                          [&](const HPolytope& p) -> ConcreteSet {
                              return HPolytope(shift_constraints(p.constraints()), p.dim(), BoundednessCheck::Skip);
                          },
                          [&](const VPolygon& p) -> ConcreteSet {
                              // Already a hull; shifting keeps order and extremality.
                              return VPolygon(shift_points(p.vertices()));
                          },
                          [&](const VPolytope& p) -> ConcreteSet {
                              return VPolytope(shift_points(p.vertices()), p.dim());
                          },
                      },
                      x);
}

}  // namespace setcalc
