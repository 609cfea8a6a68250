#include "setcalc/sets.hpp"

#include "setcalc/errors.hpp"
#include "setcalc/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

namespace setcalc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

void require_dim(const Vector& v, Eigen::Index n, const char* what) {
    if (v.size() != n) {
        throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(v.size()) +
                                " but the set has dimension " + std::to_string(n));
    }
}

Eigen::Index common_dimension(const std::vector<HalfSpace>& constraints) {
    if (constraints.empty()) {
        throw InvalidArgument("cannot infer the dimension of an empty constraint list");
    }
    return constraints.front().dim();
}

void check_constraint_dims(const std::vector<HalfSpace>& constraints, Eigen::Index n) {
    if (n < 1) {
        throw InvalidArgument("polyhedron dimension must be positive");
    }
    for (const auto& c : constraints) {
        if (c.dim() != n) {
            throw DimensionMismatch("constraint of dimension " + std::to_string(c.dim()) +
                                    " in a polyhedron of dimension " + std::to_string(n));
        }
    }
}

std::vector<LinearConstraint> to_linear(const std::vector<HalfSpace>& constraints) {
    std::vector<LinearConstraint> out;
    out.reserve(constraints.size());
    for (const auto& c : constraints) {
        out.push_back(c.as_constraint());
    }
    return out;
}

std::vector<HalfSpace> to_halfspaces(const std::vector<LinearConstraint>& constraints) {
    std::vector<HalfSpace> out;
    out.reserve(constraints.size());
    for (const auto& c : constraints) {
        out.emplace_back(c.normal, c.offset);
    }
    return out;
}

Vector unit(Eigen::Index n, Eigen::Index i, double sign = 1.0) {
    Vector e = Vector::Zero(n);
    e[i] = sign;
    return e;
}

// Polyhedral support: +inf when unbounded, throws when empty.
LpOutcome polyhedral_support(const Vector& d, const std::vector<HalfSpace>& constraints,
                             const ToleranceContext& ctx) {
    LpOutcome out = solve_lp({d, to_linear(constraints)}, ctx);
    if (out.status == LpStatus::Infeasible) {
        throw EmptySetError("support query on an empty polyhedron");
    }
    return out;
}

bool polyhedron_bounded(const std::vector<HalfSpace>& constraints, Eigen::Index n, const ToleranceContext& ctx) {
    const auto linear = to_linear(constraints);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
            const LpOutcome out = solve_lp({unit(n, i, sign), linear}, ctx);
            if (out.status == LpStatus::Infeasible) {
                return true;
            }
            if (out.status == LpStatus::Unbounded) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Vector> dedupe(const std::vector<Vector>& points, const ToleranceContext& ctx) {
    std::vector<Vector> out;
    for (const auto& p : points) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& q) {
            return (p - q).cwiseAbs().maxCoeff() <= ctx.atol();
        });
        if (!seen) {
            out.push_back(p);
        }
    }
    return out;
}

// Is p a convex combination of the given points (LP in the weights)?
bool in_convex_hull(const Vector& p, const std::vector<Vector>& points, const ToleranceContext& ctx) {
    if (points.empty()) {
        return false;
    }
    const auto k = static_cast<Eigen::Index>(points.size());
    const Eigen::Index n = p.size();
    std::vector<LinearConstraint> cons;
    cons.reserve(static_cast<std::size_t>(k + 2 + 2 * n));
    for (Eigen::Index j = 0; j < k; ++j) {
        cons.push_back({unit(k, j, -1.0), 0.0});
    }
    cons.push_back({Vector::Ones(k), 1.0});
    cons.push_back({-Vector::Ones(k), -1.0});
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector row(k);
        for (Eigen::Index j = 0; j < k; ++j) {
            row[j] = points[static_cast<std::size_t>(j)][i];
        }
        cons.push_back({row, p[i] + ctx.atol()});
        cons.push_back({-row, -p[i] + ctx.atol()});
    }
    return is_feasible(cons, ctx);
}

bool zonotope_contains(const Zonotope& z, const Vector& x, const ToleranceContext& ctx) {
    const Vector offset = x - z.center();
    const Eigen::Index m = z.num_generators();
    if (m == 0) {
        return offset.cwiseAbs().maxCoeff() <= ctx.atol();
    }
    const Eigen::Index n = z.dim();
    std::vector<LinearConstraint> cons;
    cons.reserve(static_cast<std::size_t>(2 * m + 2 * n));
    for (Eigen::Index j = 0; j < m; ++j) {
        cons.push_back({unit(m, j), 1.0});
        cons.push_back({unit(m, j, -1.0), 1.0});
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vector row = z.generators().row(i).transpose();
        cons.push_back({row, offset[i] + ctx.atol()});
        cons.push_back({-row, -offset[i] + ctx.atol()});
    }
    return is_feasible(cons, ctx);
}

std::vector<Vector> box_vertices(const Hyperrectangle& h) {
    const Eigen::Index n = h.dim();
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (h.radius()[i] > 0.0) {
            active.push_back(i);
        }
    }
    if (active.size() > 24) {
        throw UnsupportedOperation("vertex enumeration of a hyperrectangle with " + std::to_string(active.size()) +
                                   " nondegenerate axes");
    }
    const std::size_t count = std::size_t{1} << active.size();
    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector v = h.center();
        for (std::size_t bit = 0; bit < active.size(); ++bit) {
            const Eigen::Index i = active[bit];
            v[i] += ((k >> bit) & 1U) ? -h.radius()[i] : h.radius()[i];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> zonotope_vertices(const Zonotope& z, const ToleranceContext& ctx) {
    const Eigen::Index n = z.dim();
    const Eigen::Index m = z.num_generators();
    if (m == 0) {
        return {z.center()};
    }
    if (n == 1) {
        const double r = z.generators().cwiseAbs().sum();
        return dedupe({z.center() + Vector::Constant(1, r), z.center() - Vector::Constant(1, r)}, ctx);
    }
    if (n != 2) {
        throw UnsupportedOperation("zonotope vertex enumeration is only available in dimension <= 2");
    }
    if (m > kMaxEnumeratedGenerators) {
        throw UnsupportedOperation("zonotope vertex enumeration is capped at " +
                                   std::to_string(kMaxEnumeratedGenerators) + " generators");
    }
    const std::size_t count = std::size_t{1} << m;
    std::vector<Vector> points;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector v = z.center();
        for (Eigen::Index j = 0; j < m; ++j) {
            if ((k >> j) & 1U) {
                v -= z.generators().col(j);
            } else {
                v += z.generators().col(j);
            }
        }
        points.push_back(std::move(v));
    }
    return planar::convex_hull(std::move(points), ctx);
}

std::vector<HalfSpace> box_constraints(const Hyperrectangle& h) {
    const Eigen::Index n = h.dim();
    std::vector<HalfSpace> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (Eigen::Index i = 0; i < n; ++i) {
        out.emplace_back(unit(n, i), h.center()[i] + h.radius()[i]);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        out.emplace_back(unit(n, i, -1.0), h.radius()[i] - h.center()[i]);
    }
    return out;
}

std::vector<Vector> hrep_vertices(const std::vector<HalfSpace>& constraints, Eigen::Index n,
                                  const ToleranceContext& ctx) {
    if (n > 2) {
        throw UnsupportedOperation("vertex enumeration of H-representations is only available in dimension <= 2");
    }
    const auto linear = to_linear(constraints);
    if (!is_feasible(linear, ctx)) {
        return {};
    }
    if (!polyhedron_bounded(constraints, n, ctx)) {
        throw UnboundedError("vertices_list of an unbounded polyhedron");
    }
    if (n == 1) {
        const double hi = solve_lp({unit(1, 0), linear}, ctx).optimum.value();
        const double lo = -solve_lp({unit(1, 0, -1.0), linear}, ctx).optimum.value();
        return dedupe({Vector::Constant(1, lo), Vector::Constant(1, hi)}, ctx);
    }
    return planar::halfplane_vertices(linear, ctx);
}

// Extreme points of a point cloud in arbitrary dimension.
std::vector<Vector> prune_to_extreme(const std::vector<Vector>& points, Eigen::Index n, const ToleranceContext& ctx) {
    if (n == 2) {
        return planar::convex_hull(points, ctx);
    }
    std::vector<Vector> unique = dedupe(points, ctx);
    if (n == 1) {
        if (unique.empty()) {
            return unique;
        }
        auto [lo, hi] = std::minmax_element(unique.begin(), unique.end(),
                                            [](const Vector& a, const Vector& b) { return a[0] < b[0]; });
        return dedupe({*lo, *hi}, ctx);
    }
    std::vector<Vector> kept;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<Vector> others;
        for (std::size_t j = 0; j < unique.size(); ++j) {
            if (j != i) {
                others.push_back(unique[j]);
            }
        }
        if (!in_convex_hull(unique[i], others, ctx)) {
            kept.push_back(unique[i]);
        }
    }
    return kept;
}

double vertex_support(const Vector& d, const std::vector<Vector>& vertices, std::size_t* argmax) {
    if (vertices.empty()) {
        throw EmptySetError("support query on an empty vertex representation");
    }
    double best = -kInf;
    std::size_t index = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const double value = d.dot(vertices[i]);
        if (value > best) {
            best = value;
            index = i;
        }
    }
    if (argmax != nullptr) {
        *argmax = index;
    }
    return best;
}

// Scalar lambda >= 0 with d = lambda a, when it exists.
std::optional<double> positive_multiple(const Vector& d, const Vector& a, bool allow_negative,
                                        const ToleranceContext& ctx) {
    const double lambda = d.dot(a) / a.squaredNorm();
    const Vector residual = d - lambda * a;
    if (residual.cwiseAbs().maxCoeff() > ctx.ztol() * std::max(1.0, d.norm())) {
        return std::nullopt;
    }
    if (!allow_negative && lambda < 0.0) {
        return std::nullopt;
    }
    return lambda;
}

Vector point_on_hyperplane(const Vector& a, double b) { return a * (b / a.squaredNorm()); }

}  // namespace

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

HalfSpace::HalfSpace(Vector normal, double offset) : normal_(std::move(normal)), offset_(offset) {
    if (normal_.size() < 1) {
        throw InvalidArgument("half-space normal must have at least one entry");
    }
    require_finite(normal_, "half-space normal");
    if (std::isnan(offset_)) {
        throw InvalidArgument("half-space offset is NaN");
    }
    if (normal_.cwiseAbs().maxCoeff() <= default_tolerance().ztol()) {
        throw InvalidArgument("half-space normal must be nonzero");
    }
}

Hyperplane::Hyperplane(Vector normal, double offset) : normal_(std::move(normal)), offset_(offset) {
    if (normal_.size() < 1) {
        throw InvalidArgument("hyperplane normal must have at least one entry");
    }
    require_finite(normal_, "hyperplane normal");
    if (!std::isfinite(offset_)) {
        throw InvalidArgument("hyperplane offset must be finite");
    }
    if (normal_.cwiseAbs().maxCoeff() <= default_tolerance().ztol()) {
        throw InvalidArgument("hyperplane normal must be nonzero");
    }
}

Hyperrectangle::Hyperrectangle(Vector center, Vector radius) : center_(std::move(center)), radius_(std::move(radius)) {
    if (center_.size() != radius_.size()) {
        throw DimensionMismatch("hyperrectangle center has dimension " + std::to_string(center_.size()) +
                                " but radius has dimension " + std::to_string(radius_.size()));
    }
    if (center_.size() < 1) {
        throw InvalidArgument("hyperrectangle must have positive dimension");
    }
    require_finite(center_, "hyperrectangle center");
    require_finite(radius_, "hyperrectangle radius");
    if ((radius_.array() < 0.0).any()) {
        throw InvalidArgument("hyperrectangle radius must be nonnegative");
    }
}

Hyperrectangle Hyperrectangle::from_bounds(const Vector& low, const Vector& high) {
    if (low.size() != high.size()) {
        throw DimensionMismatch("box bounds have different dimensions");
    }
    if ((high.array() < low.array()).any()) {
        throw InvalidArgument("box lower bound exceeds upper bound");
    }
    return {0.5 * (low + high), 0.5 * (high - low)};
}

BallInf::BallInf(Vector center, double radius) : center_(std::move(center)), radius_(radius) {
    if (center_.size() < 1) {
        throw InvalidArgument("BallInf must have positive dimension");
    }
    require_finite(center_, "BallInf center");
    if (!std::isfinite(radius_) || radius_ < 0.0) {
        throw InvalidArgument("BallInf radius must be finite and nonnegative");
    }
}

Hyperrectangle BallInf::as_hyperrectangle() const {
    return {center_, Vector::Constant(center_.size(), radius_)};
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidArgument("interval bounds must be finite");
    }
    if (lo > hi) {
        throw InvalidArgument("interval lower bound exceeds upper bound");
    }
}

Hyperrectangle Interval::as_hyperrectangle() const {
    return {Vector::Constant(1, center()), Vector::Constant(1, radius())};
}

Zonotope::Zonotope(Vector center, Matrix generators) : center_(std::move(center)), generators_(std::move(generators)) {
    if (center_.size() < 1) {
        throw InvalidArgument("zonotope must have positive dimension");
    }
    if (generators_.cols() == 0) {
        generators_.resize(center_.size(), 0);
    }
    if (generators_.rows() != center_.size()) {
        throw DimensionMismatch("zonotope generators have dimension " + std::to_string(generators_.rows()) +
                                " but the center has dimension " + std::to_string(center_.size()));
    }
    require_finite(center_, "zonotope center");
    if (!generators_.allFinite()) {
        throw InvalidArgument("zonotope generators must be finite");
    }
}

HPolyhedron::HPolyhedron(std::vector<HalfSpace> constraints, Eigen::Index dim)
    : constraints_(std::move(constraints)), dim_(dim) {
    check_constraint_dims(constraints_, dim_);
}

HPolyhedron::HPolyhedron(std::vector<HalfSpace> constraints)
    : HPolyhedron(constraints, common_dimension(constraints)) {}

std::vector<LinearConstraint> HPolyhedron::linear_constraints() const { return to_linear(constraints_); }

HPolytope::HPolytope(std::vector<HalfSpace> constraints, Eigen::Index dim, BoundednessCheck check)
    : constraints_(std::move(constraints)), dim_(dim) {
    check_constraint_dims(constraints_, dim_);
    if (check == BoundednessCheck::Verify && !polyhedron_bounded(constraints_, dim_, default_tolerance())) {
        throw UnboundedError("HPolytope constraints describe an unbounded set");
    }
}

HPolytope::HPolytope(std::vector<HalfSpace> constraints, BoundednessCheck check)
    : HPolytope(constraints, common_dimension(constraints), check) {}

std::vector<LinearConstraint> HPolytope::linear_constraints() const { return to_linear(constraints_); }

VPolygon::VPolygon(const std::vector<Vector>& points, const ToleranceContext& ctx) {
    for (const auto& p : points) {
        if (p.size() != 2) {
            throw DimensionMismatch("VPolygon points must be 2-dimensional, got dimension " + std::to_string(p.size()));
        }
        require_finite(p, "VPolygon vertex");
    }
    vertices_ = planar::convex_hull(points, ctx);
}

VPolytope::VPolytope(const std::vector<Vector>& points, Eigen::Index dim, const ToleranceContext& ctx) : dim_(dim) {
    if (dim_ < 1) {
        throw InvalidArgument("VPolytope dimension must be positive");
    }
    for (const auto& p : points) {
        require_dim(p, dim_, "VPolytope vertex");
        require_finite(p, "VPolytope vertex");
    }
    if (dim_ <= 2) {
        vertices_ = prune_to_extreme(points, dim_, ctx);
    } else {
        vertices_ = dedupe(points, ctx);
    }
}

VPolytope::VPolytope(const std::vector<Vector>& points, const ToleranceContext& ctx)
    : VPolytope(points, points.empty() ? throw InvalidArgument("cannot infer the dimension of an empty point list")
                                       : points.front().size(),
                ctx) {}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

std::string_view kind_name(const ConcreteSet& set) {
    return std::visit(overloaded{
                          [](const HalfSpace&) { return std::string_view("HalfSpace"); },
                          [](const Hyperplane&) { return std::string_view("Hyperplane"); },
                          [](const Hyperrectangle&) { return std::string_view("Hyperrectangle"); },
                          [](const BallInf&) { return std::string_view("BallInf"); },
                          [](const Interval&) { return std::string_view("Interval"); },
                          [](const Zonotope&) { return std::string_view("Zonotope"); },
                          [](const HPolyhedron&) { return std::string_view("HPolyhedron"); },
                          [](const HPolytope&) { return std::string_view("HPolytope"); },
                          [](const VPolygon&) { return std::string_view("VPolygon"); },
                          [](const VPolytope&) { return std::string_view("VPolytope"); },
                      },
                      set);
}

bool is_hyperrectangular(const ConcreteSet& set) {
    return std::holds_alternative<Hyperrectangle>(set) || std::holds_alternative<BallInf>(set) ||
           std::holds_alternative<Interval>(set);
}

bool is_zonotopic(const ConcreteSet& set) { return is_hyperrectangular(set) || std::holds_alternative<Zonotope>(set); }

Hyperrectangle as_hyperrectangle(const ConcreteSet& set) {
    if (const auto* h = std::get_if<Hyperrectangle>(&set)) {
        return *h;
    }
    if (const auto* b = std::get_if<BallInf>(&set)) {
        return b->as_hyperrectangle();
    }
    if (const auto* i = std::get_if<Interval>(&set)) {
        return i->as_hyperrectangle();
    }
    throw UnsupportedOperation(std::string(kind_name(set)) + " is not a hyperrectangular set");
}

Zonotope as_zonotope(const ConcreteSet& set) {
    if (const auto* z = std::get_if<Zonotope>(&set)) {
        return *z;
    }
    const Hyperrectangle h = as_hyperrectangle(set);
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
        if (h.radius()[i] > 0.0) {
            active.push_back(i);
        }
    }
    Matrix gens = Matrix::Zero(h.dim(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) {
        gens(active[j], static_cast<Eigen::Index>(j)) = h.radius()[active[j]];
    }
    return {h.center(), std::move(gens)};
}

Eigen::Index dim(const ConcreteSet& set) {
    return std::visit([](const auto& s) { return s.dim(); }, set);
}

// ---------------------------------------------------------------------------
// Support function / support vector
// ---------------------------------------------------------------------------

double support_function(const Vector& d, const ConcreteSet& set, const ToleranceContext& ctx) {
    require_dim(d, dim(set), "direction");
    return std::visit(
        overloaded{
            [&](const HalfSpace& h) -> double {
                if (d.isZero(0.0)) {
                    return 0.0;
                }
                const auto lambda = positive_multiple(d, h.normal(), false, ctx);
                return lambda ? *lambda * h.offset() : kInf;
            },
            [&](const Hyperplane& h) -> double {
                if (d.isZero(0.0)) {
                    return 0.0;
                }
                const auto lambda = positive_multiple(d, h.normal(), true, ctx);
                return lambda ? *lambda * h.offset() : kInf;
            },
            [&](const Hyperrectangle& h) { return d.dot(h.center()) + d.cwiseAbs().dot(h.radius()); },
            [&](const BallInf& b) { return d.dot(b.center()) + d.cwiseAbs().sum() * b.radius(); },
            [&](const Interval& i) { return d[0] * i.center() + std::abs(d[0]) * i.radius(); },
            [&](const Zonotope& z) {
                return d.dot(z.center()) + (z.generators().transpose() * d).cwiseAbs().sum();
            },
            [&](const HPolyhedron& p) {
                const LpOutcome out = polyhedral_support(d, p.constraints(), ctx);
                return out.optimal() ? *out.optimum : kInf;
            },
            [&](const HPolytope& p) {
                const LpOutcome out = polyhedral_support(d, p.constraints(), ctx);
                return out.optimal() ? *out.optimum : kInf;
            },
            [&](const VPolygon& p) { return vertex_support(d, p.vertices(), nullptr); },
            [&](const VPolytope& p) { return vertex_support(d, p.vertices(), nullptr); },
        },
        set);
}

Vector support_vector(const Vector& d, const ConcreteSet& set, const ToleranceContext& ctx) {
    require_dim(d, dim(set), "direction");
    auto box_vector = [&](const Vector& c, const Vector& r) {
        Vector v = c;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            v[i] += d[i] >= 0.0 ? r[i] : -r[i];
        }
        return v;
    };
    auto polyhedral = [&](const std::vector<HalfSpace>& constraints) {
        const LpOutcome out = polyhedral_support(d, constraints, ctx);
        if (!out.optimal()) {
            throw UnboundedError("polyhedron is unbounded in the query direction");
        }
        return *out.optimizer;
    };
    return std::visit(
        overloaded{
            [&](const HalfSpace& h) -> Vector {
                if (d.isZero(0.0) || positive_multiple(d, h.normal(), false, ctx)) {
                    return point_on_hyperplane(h.normal(), h.offset());
                }
                throw UnboundedError("half-space is unbounded in the query direction");
            },
            [&](const Hyperplane& h) -> Vector {
                if (d.isZero(0.0) || positive_multiple(d, h.normal(), true, ctx)) {
                    return point_on_hyperplane(h.normal(), h.offset());
                }
                throw UnboundedError("hyperplane is unbounded in the query direction");
            },
            [&](const Hyperrectangle& h) { return box_vector(h.center(), h.radius()); },
            [&](const BallInf& b) { return box_vector(b.center(), Vector::Constant(b.dim(), b.radius())); },
            [&](const Interval& i) -> Vector {
                return Vector::Constant(1, d[0] >= 0.0 ? i.hi() : i.lo());
            },
            [&](const Zonotope& z) {
                Vector v = z.center();
                for (Eigen::Index j = 0; j < z.num_generators(); ++j) {
                    const auto g = z.generators().col(j);
                    if (d.dot(g) >= 0.0) {
                        v += g;
                    } else {
                        v -= g;
                    }
                }
                return v;
            },
            [&](const HPolyhedron& p) { return polyhedral(p.constraints()); },
            [&](const HPolytope& p) { return polyhedral(p.constraints()); },
            [&](const VPolygon& p) {
                std::size_t k = 0;
                vertex_support(d, p.vertices(), &k);
                return p.vertices()[k];
            },
            [&](const VPolytope& p) {
                std::size_t k = 0;
                vertex_support(d, p.vertices(), &k);
                return p.vertices()[k];
            },
        },
        set);
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool membership(const Vector& x, const ConcreteSet& set, const ToleranceContext& ctx) {
    require_dim(x, dim(set), "point");
    auto in_box = [&](const Vector& c, const Vector& r) {
        return ((x - c).cwiseAbs() - r).maxCoeff() <= ctx.atol();
    };
    auto in_constraints = [&](const std::vector<HalfSpace>& constraints) {
        return std::all_of(constraints.begin(), constraints.end(),
                           [&](const HalfSpace& h) { return approx_le(h.normal().dot(x), h.offset(), ctx); });
    };
    return std::visit(overloaded{
                          [&](const HalfSpace& h) { return approx_le(h.normal().dot(x), h.offset(), ctx); },
                          [&](const Hyperplane& h) { return approx_eq(h.normal().dot(x), h.offset(), ctx); },
                          [&](const Hyperrectangle& h) { return in_box(h.center(), h.radius()); },
                          [&](const BallInf& b) {
                              return (x - b.center()).cwiseAbs().maxCoeff() <= b.radius() + ctx.atol();
                          },
                          [&](const Interval& i) { return x[0] >= i.lo() - ctx.atol() && x[0] <= i.hi() + ctx.atol(); },
                          [&](const Zonotope& z) { return zonotope_contains(z, x, ctx); },
                          [&](const HPolyhedron& p) { return in_constraints(p.constraints()); },
                          [&](const HPolytope& p) { return in_constraints(p.constraints()); },
                          [&](const VPolygon& p) { return planar::contains(p.vertices(), x, ctx); },
                          [&](const VPolytope& p) {
                              if (p.dim() == 2) {
                                  return planar::contains(p.vertices(), x, ctx);
                              }
                              return in_convex_hull(x, p.vertices(), ctx);
                          },
                      },
                      set);
}

// ---------------------------------------------------------------------------
// Vertices and constraints
// ---------------------------------------------------------------------------

std::vector<Vector> vertices_list(const ConcreteSet& set, const ToleranceContext& ctx) {
    return std::visit(overloaded{
                          [&](const HalfSpace&) -> std::vector<Vector> {
                              throw UnboundedError("vertices_list of an unbounded half-space");
                          },
                          [&](const Hyperplane& h) -> std::vector<Vector> {
                              if (h.dim() == 1) {
                                  return {point_on_hyperplane(h.normal(), h.offset())};
                              }
                              throw UnboundedError("vertices_list of an unbounded hyperplane");
                          },
                          [&](const Hyperrectangle& h) { return box_vertices(h); },
                          [&](const BallInf& b) { return box_vertices(b.as_hyperrectangle()); },
                          [&](const Interval& i) { return box_vertices(i.as_hyperrectangle()); },
                          [&](const Zonotope& z) { return zonotope_vertices(z, ctx); },
                          [&](const HPolyhedron& p) { return hrep_vertices(p.constraints(), p.dim(), ctx); },
                          [&](const HPolytope& p) { return hrep_vertices(p.constraints(), p.dim(), ctx); },
                          [&](const VPolygon& p) { return p.vertices(); },
                          [&](const VPolytope& p) {
                              if (p.dim() <= 2) {
                                  return p.vertices();
                              }
                              return prune_to_extreme(p.vertices(), p.dim(), ctx);
                          },
                      },
                      set);
}

std::vector<HalfSpace> constraints_list(const ConcreteSet& set, const ToleranceContext& ctx) {
    auto from_points = [&](const std::vector<Vector>& points, Eigen::Index n) -> std::vector<HalfSpace> {
        if (n == 1) {
            if (points.empty()) {
                return {HalfSpace(unit(1, 0), 0.0), HalfSpace(unit(1, 0, -1.0), -1.0)};
            }
            double lo = points.front()[0];
            double hi = lo;
            for (const auto& p : points) {
                lo = std::min(lo, p[0]);
                hi = std::max(hi, p[0]);
            }
            return box_constraints(Hyperrectangle::from_bounds(Vector::Constant(1, lo), Vector::Constant(1, hi)));
        }
        if (n == 2) {
            return to_halfspaces(planar::edge_constraints(planar::convex_hull(points, ctx)));
        }
        throw UnsupportedOperation("constraint enumeration of V-representations is only available in dimension <= 2");
    };
    return std::visit(overloaded{
                          [&](const HalfSpace& h) { return std::vector<HalfSpace>{h}; },
                          [&](const Hyperplane& h) {
                              return std::vector<HalfSpace>{HalfSpace(h.normal(), h.offset()),
                                                            HalfSpace(-h.normal(), -h.offset())};
                          },
                          [&](const Hyperrectangle& h) { return box_constraints(h); },
                          [&](const BallInf& b) { return box_constraints(b.as_hyperrectangle()); },
                          [&](const Interval& i) { return box_constraints(i.as_hyperrectangle()); },
                          [&](const Zonotope& z) {
                              if (z.dim() > 2) {
                                  throw UnsupportedOperation(
                                      "constraint enumeration of zonotopes is only available in dimension <= 2");
                              }
                              return from_points(zonotope_vertices(z, ctx), z.dim());
                          },
                          [&](const HPolyhedron& p) { return p.constraints(); },
                          [&](const HPolytope& p) { return p.constraints(); },
                          [&](const VPolygon& p) { return to_halfspaces(planar::edge_constraints(p.vertices())); },
                          [&](const VPolytope& p) { return from_points(p.vertices(), p.dim()); },
                      },
                      set);
}

// ---------------------------------------------------------------------------
// Misc queries
// ---------------------------------------------------------------------------

double volume(const ConcreteSet& set) {
    if (!is_hyperrectangular(set)) {
        throw UnsupportedOperation("volume is only implemented for hyperrectangular sets, not " +
                                   std::string(kind_name(set)));
    }
    return (2.0 * as_hyperrectangle(set).radius()).prod();
}

bool is_bounded(const ConcreteSet& set, const ToleranceContext& ctx) {
    return std::visit(overloaded{
                          [&](const HalfSpace&) { return false; },
                          [&](const Hyperplane& h) { return h.dim() == 1; },
                          [&](const HPolyhedron& p) { return polyhedron_bounded(p.constraints(), p.dim(), ctx); },
                          [&](const auto&) { return true; },
                      },
                      set);
}

Vector an_element(const ConcreteSet& set, const ToleranceContext& ctx) {
    auto feasible = [&](const std::vector<HalfSpace>& constraints, Eigen::Index n) {
        auto p = feasible_point(to_linear(constraints), n, ctx);
        if (!p) {
            throw EmptySetError("an_element of an empty polyhedron");
        }
        return *p;
    };
    auto first_vertex = [&](const std::vector<Vector>& vertices) {
        if (vertices.empty()) {
            throw EmptySetError("an_element of an empty vertex representation");
        }
        return vertices.front();
    };
    return std::visit(overloaded{
                          [&](const HalfSpace& h) { return point_on_hyperplane(h.normal(), h.offset()); },
                          [&](const Hyperplane& h) { return point_on_hyperplane(h.normal(), h.offset()); },
                          [&](const Hyperrectangle& h) { return h.center(); },
                          [&](const BallInf& b) { return b.center(); },
                          [&](const Interval& i) { return Vector(Vector::Constant(1, i.center())); },
                          [&](const Zonotope& z) { return z.center(); },
                          [&](const HPolyhedron& p) { return feasible(p.constraints(), p.dim()); },
                          [&](const HPolytope& p) { return feasible(p.constraints(), p.dim()); },
                          [&](const VPolygon& p) { return first_vertex(p.vertices()); },
                          [&](const VPolytope& p) { return first_vertex(p.vertices()); },
                      },
                      set);
}

Hyperrectangle bounding_box(const ConcreteSet& set, const ToleranceContext& ctx) {
    if (is_hyperrectangular(set)) {
        return as_hyperrectangle(set);
    }
    const Eigen::Index n = dim(set);
    Vector low(n);
    Vector high(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        high[i] = support_function(unit(n, i), set, ctx);
        low[i] = -support_function(unit(n, i, -1.0), set, ctx);
        if (!std::isfinite(high[i]) || !std::isfinite(low[i])) {
            throw UnboundedError("bounding box of an unbounded set");
        }
    }
    high = high.cwiseMax(low);
    return Hyperrectangle::from_bounds(low, high);
}

std::vector<Vector> sample(const ConcreteSet& set, std::size_t count, std::uint64_t seed, const ToleranceContext& ctx) {
    const Hyperrectangle box = bounding_box(set, ctx);
    const bool exact_box = is_hyperrectangular(set);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit_draw(-1.0, 1.0);
    constexpr std::size_t kBudgetPerPoint = 1'000'000;

    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        bool accepted = false;
        for (std::size_t attempt = 0; attempt < kBudgetPerPoint; ++attempt) {
            Vector x = box.center();
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] += unit_draw(rng) * box.radius()[i];
            }
            if (exact_box || membership(x, set, ctx)) {
                out.push_back(std::move(x));
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw BudgetExceeded("rejection sampling exceeded its budget of 10^6 draws per point");
        }
    }
    return out;
}

}  // namespace setcalc
