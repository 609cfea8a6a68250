#include "setcalc/approximation.hpp"

#include "setcalc/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace setcalc {

namespace {

constexpr QueryMode kOuter = QueryMode::Overapproximate;

Vector unit(Eigen::Index n, Eigen::Index i, double sign = 1.0) {
    Vector e = Vector::Zero(n);
    e[i] = sign;
    return e;
}

Vector planar(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

void require_dim(const DirectionTemplate& t, const SetExpr& x) {
    if (t.dim() != x.dim()) {
        throw DimensionMismatch("template has dimension " + std::to_string(t.dim()) + " but the set has dimension " +
                                std::to_string(x.dim()));
    }
}

void require_directions(const std::vector<Vector>& directions, Eigen::Index n) {
    if (directions.empty()) {
        throw InvalidArgument("at least one direction is required");
    }
    for (const auto& d : directions) {
        if (d.size() != n) {
            throw DimensionMismatch("direction has dimension " + std::to_string(d.size()) + ", expected " +
                                    std::to_string(n));
        }
        if (!d.allFinite() || d.isZero(0.0)) {
            throw InvalidArgument("directions must be finite and nonzero");
        }
    }
}

struct SupportSample {
    Vector direction;
    double value;
    Vector point;
};

SupportSample probe(const Vector& d, const SetExpr& x, const ToleranceContext& ctx) {
    const double value = lazy_support_function(d, x, QueryMode::Exact, ctx);
    if (!std::isfinite(value)) {
        throw UnboundedError("epsilon-close approximation needs a bounded set");
    }
    return {d, value, lazy_support_vector(d, x, ctx)};
}

// Intersection of the supporting lines of two samples; the directions are
// never parallel because adjacent directions are less than pi apart.
Vector corner(const SupportSample& a, const SupportSample& b) {
    const Vector& p = a.direction;
    const Vector& q = b.direction;
    const double det = p[0] * q[1] - p[1] * q[0];
    return planar((a.value * q[1] - b.value * p[1]) / det, (p[0] * b.value - q[0] * a.value) / det);
}

double segment_distance(const Vector& a, const Vector& b, const Vector& p) {
    const Vector ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) {
        return (p - a).norm();
    }
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

}  // namespace

// ---------------------------------------------------------------------------
// Templates
// ---------------------------------------------------------------------------

DirectionTemplate::DirectionTemplate(TemplateKind kind, Eigen::Index dim, int resolution,
                                     std::vector<Vector> directions)
    : kind_(kind), dim_(dim), resolution_(resolution), directions_(std::move(directions)) {}

DirectionTemplate DirectionTemplate::box(Eigen::Index n) {
    if (n < 1) {
        throw InvalidArgument("box template needs dimension >= 1");
    }
    std::vector<Vector> dirs;
    for (Eigen::Index i = 0; i < n; ++i) {
        dirs.push_back(unit(n, i));
        dirs.push_back(unit(n, i, -1.0));
    }
    return {TemplateKind::Box, n, 0, std::move(dirs)};
}

DirectionTemplate DirectionTemplate::oct(Eigen::Index n) {
    if (n != 2) {
        throw InvalidArgument("the octagonal template is only defined in dimension 2, got " + std::to_string(n));
    }
    const double s = std::numbers::sqrt2 / 2.0;
    std::vector<Vector> dirs{planar(1, 0),  planar(s, s),   planar(0, 1),  planar(-s, s),
                             planar(-1, 0), planar(-s, -s), planar(0, -1), planar(s, -s)};
    return {TemplateKind::Oct, 2, 0, std::move(dirs)};
}

DirectionTemplate DirectionTemplate::polar(int k) {
    if (k < 1) {
        throw InvalidArgument("polar template needs k >= 1");
    }
    std::vector<Vector> dirs;
    for (int j = 0; j < k; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / k;
        dirs.push_back(planar(std::cos(angle), std::sin(angle)));
    }
    return {TemplateKind::Polar, 2, k, std::move(dirs)};
}

DirectionTemplate DirectionTemplate::spherical(int k) {
    if (k < 1) {
        throw InvalidArgument("spherical template needs k >= 1");
    }
    std::vector<Vector> dirs;
    for (int i = 0; i < k; ++i) {
        const double theta = std::numbers::pi * (i + 0.5) / k;
        for (int j = 0; j < k; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / k;
            Vector d(3);
            d << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
            dirs.push_back(std::move(d));
        }
    }
    return {TemplateKind::Spherical, 3, k, std::move(dirs)};
}

DirectionTemplate DirectionTemplate::custom(std::vector<Vector> directions) {
    if (directions.empty()) {
        throw InvalidArgument("custom template needs at least one direction");
    }
    const Eigen::Index n = directions.front().size();
    require_directions(directions, n);
    return {TemplateKind::Custom, n, 0, std::move(directions)};
}

std::vector<Vector> generate_directions(const DirectionTemplate& t) { return t.directions(); }

// ---------------------------------------------------------------------------
// Outer approximations
// ---------------------------------------------------------------------------

ConcreteSet overapproximate_template(const SetExpr& x, const DirectionTemplate& t, const ToleranceContext& ctx) {
    require_dim(t, x);
    std::vector<HalfSpace> constraints;
    bool dropped = false;
    for (const auto& d : t.directions()) {
        const double rho = lazy_support_function(d, x, kOuter, ctx);
        if (std::isfinite(rho)) {
            constraints.emplace_back(d, rho);
        } else {
            dropped = true;
        }
    }
    HPolyhedron result(constraints, x.dim());
    if (dropped || !is_bounded(result, ctx)) {
        return result;
    }
    return HPolytope(std::move(constraints), x.dim(), BoundednessCheck::Skip);
}

Hyperrectangle box_approximation(const SetExpr& x, const ToleranceContext& ctx) {
    const Eigen::Index n = x.dim();
    Vector lo(n);
    Vector hi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        hi[i] = lazy_support_function(unit(n, i), x, kOuter, ctx);
        lo[i] = -lazy_support_function(unit(n, i, -1.0), x, kOuter, ctx);
        if (!std::isfinite(hi[i]) || !std::isfinite(lo[i])) {
            throw UnboundedError("box approximation of a set unbounded along axis " + std::to_string(i));
        }
    }
    return Hyperrectangle::from_bounds(lo, hi);
}

Hyperrectangle symmetric_interval_hull(const SetExpr& x, const ToleranceContext& ctx) {
    const Eigen::Index n = x.dim();
    Vector radius(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double hi = lazy_support_function(unit(n, i), x, kOuter, ctx);
        const double lo = lazy_support_function(unit(n, i, -1.0), x, kOuter, ctx);
        radius[i] = std::max(std::abs(hi), std::abs(lo));
        if (!std::isfinite(radius[i])) {
            throw UnboundedError("symmetric interval hull of a set unbounded along axis " + std::to_string(i));
        }
    }
    return {Vector::Zero(n), radius};
}

EpsApproximation overapproximate_eps_2d(const SetExpr& x, double eps, const ToleranceContext& ctx) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw InvalidArgument("epsilon must be a positive finite number");
    }
    if (x.dim() != 2) {
        throw UnsupportedOperation("epsilon-close approximation is only implemented in dimension 2");
    }
    std::vector<SupportSample> samples;
    for (const auto& d : {planar(1, 0), planar(0, 1), planar(-1, 0), planar(0, -1)}) {
        samples.push_back(probe(d, x, ctx));
    }

    std::size_t refinements = 0;
    double worst = 0.0;
    bool refined = true;
    while (refined) {
        refined = false;
        worst = 0.0;
        std::vector<SupportSample> next;
        next.reserve(2 * samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const SupportSample& a = samples[i];
            const SupportSample& b = samples[(i + 1) % samples.size()];
            next.push_back(a);
            const double error = segment_distance(a.point, b.point, corner(a, b));
            if (error > eps) {
                if (++refinements > kMaxEpsRefinements) {
                    throw BudgetExceeded("epsilon-close approximation exceeded " +
                                         std::to_string(kMaxEpsRefinements) + " refinements");
                }
                next.push_back(probe((a.direction + b.direction).normalized(), x, ctx));
                refined = true;
            } else {
                worst = std::max(worst, error);
            }
        }
        samples = std::move(next);
    }

    std::vector<Vector> corners;
    corners.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        corners.push_back(corner(samples[i], samples[(i + 1) % samples.size()]));
    }
    return {VPolygon(corners, ctx), {worst}};
}

Zonotope overapproximate_zonotope(const SetExpr& x, const std::vector<Vector>& directions,
                                  const ToleranceContext& ctx) {
    const Eigen::Index n = x.dim();
    require_directions(directions, n);
    const ConcreteSet set = concretize(x, ctx);
    if (!is_bounded(set, ctx)) {
        throw UnboundedError("zonotope fit needs a bounded set");
    }
    const std::vector<Vector> vertices = vertices_list(set, ctx);
    if (vertices.empty()) {
        throw EmptySetError("zonotope fit of an empty set");
    }
    Vector center = Vector::Zero(n);
    for (const auto& v : vertices) {
        center += v;
    }
    center /= static_cast<double>(vertices.size());

    // Variables: alpha_0..alpha_{m-1}, then beta_{v,j} at m + v*m + j.
    const auto m = static_cast<Eigen::Index>(directions.size());
    const auto k = static_cast<Eigen::Index>(vertices.size());
    const Eigen::Index nvars = m + k * m;
    auto beta = [&](Eigen::Index v, Eigen::Index j) { return m + v * m + j; };

    LinearProgram lp;
    lp.objective = Vector::Zero(nvars);
    lp.objective.head(m).setConstant(-1.0);
    for (Eigen::Index j = 0; j < m; ++j) {
        Vector a = Vector::Zero(nvars);
        a[j] = -1.0;
        lp.constraints.push_back({a, 0.0});
    }
    for (Eigen::Index v = 0; v < k; ++v) {
        for (Eigen::Index j = 0; j < m; ++j) {
            Vector a = Vector::Zero(nvars);
            a[beta(v, j)] = 1.0;
            a[j] = -1.0;
            lp.constraints.push_back({a, 0.0});
            a[beta(v, j)] = -1.0;
            lp.constraints.push_back({a, 0.0});
        }
        const Vector offset = vertices[static_cast<std::size_t>(v)] - center;
        for (Eigen::Index i = 0; i < n; ++i) {
            Vector a = Vector::Zero(nvars);
            for (Eigen::Index j = 0; j < m; ++j) {
                a[beta(v, j)] = directions[static_cast<std::size_t>(j)][i];
            }
            lp.constraints.push_back({a, offset[i] + ctx.atol()});
            lp.constraints.push_back({-a, -offset[i] + ctx.atol()});
        }
    }
    const LpOutcome out = solve_lp(lp, ctx);
    if (!out.optimal()) {
        throw InvalidArgument("the candidate directions cannot generate a zonotope containing the set");
    }
    // The LP meets the vertex equations only within tolerance. Project each
    // residual back onto the directions and widen alpha to cover the
    // corrected coefficients, so every vertex is a member exactly.
    Matrix dirs(n, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        dirs.col(j) = directions[static_cast<std::size_t>(j)];
    }
    const Eigen::CompleteOrthogonalDecomposition<Matrix> cod(dirs);
    Vector alphas = out.optimizer->head(m);
    for (Eigen::Index v = 0; v < k; ++v) {
        const Vector b = out.optimizer->segment(beta(v, 0), m);
        const Vector residual = vertices[static_cast<std::size_t>(v)] - center - dirs * b;
        const Vector corrected = b + cod.solve(residual);
        alphas = alphas.cwiseMax(corrected.cwiseAbs());
    }
    std::vector<Vector> generators;
    for (Eigen::Index j = 0; j < m; ++j) {
        const double alpha = alphas[j];
        if (alpha > ctx.ztol()) {
            generators.push_back(alpha * directions[static_cast<std::size_t>(j)]);
        }
    }
    Matrix g(n, static_cast<Eigen::Index>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        g.col(static_cast<Eigen::Index>(j)) = generators[j];
    }
    return {center, g};
}

VPolytope underapproximate(const SetExpr& x, const std::vector<Vector>& directions, const ToleranceContext& ctx) {
    require_directions(directions, x.dim());
    std::vector<Vector> points;
    points.reserve(directions.size());
    for (const auto& d : directions) {
        points.push_back(lazy_support_vector(d, x, ctx));
    }
    return VPolytope(points, x.dim(), ctx);
}

}  // namespace setcalc
