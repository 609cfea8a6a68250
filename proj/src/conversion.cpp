#include "setcalc/conversion.hpp"

#include "setcalc/concrete_ops.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/planar.hpp"

#include <array>
#include <string>

namespace setcalc {

namespace {

constexpr std::array<std::pair<TargetKind, std::string_view>, 4> kTargets{{
    {TargetKind::Hyperrectangle, "Hyperrectangle"},
    {TargetKind::Zonotope, "Zonotope"},
    {TargetKind::HPolytope, "HPolytope"},
    {TargetKind::VPolygon, "VPolygon"},
}};

[[noreturn]] void unsupported(TargetKind target, std::string_view from) {
    throw UnsupportedOperation("no exact conversion from " + std::string(from) + " to " +
                               std::string(target_name(target)) + "; use an approximation instead");
}

void require_planar(const ConcreteSet& x, const char* what) {
    if (dim(x) != 2) {
        throw UnsupportedOperation(std::string(what) + " is only implemented in dimension 2, got dimension " +
                                   std::to_string(dim(x)));
    }
}

bool is_h_type(const ConcreteSet& x) {
    return std::holds_alternative<HPolytope>(x) || std::holds_alternative<HPolyhedron>(x) ||
           std::holds_alternative<HalfSpace>(x) || std::holds_alternative<Hyperplane>(x);
}

}  // namespace

std::string_view target_name(TargetKind kind) {
    for (const auto& [k, name] : kTargets) {
        if (k == kind) {
            return name;
        }
    }
    return "Unknown";
}

std::optional<TargetKind> target_from_name(std::string_view name) {
    for (const auto& [k, n] : kTargets) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

ConcreteSet convert_to(TargetKind target, const SetExpr& expr, const ToleranceContext& ctx) {
    if (expr.is_lazy()) {
        if (target == TargetKind::Zonotope && is_zonotope_preserving(expr)) {
            return as_zonotope(concretize(expr, ctx));
        }
        unsupported(target, "lazy " + std::string(kind_name(expr.node().kind())));
    }
    const ConcreteSet& x = expr.concrete();
    const bool planar2 = dim(x) == 2;
    switch (target) {
    case TargetKind::Hyperrectangle:
        if (is_hyperrectangular(x)) {
            return as_hyperrectangle(x);
        }
        break;
    case TargetKind::Zonotope:
        if (is_zonotopic(x)) {
            return as_zonotope(x);
        }
        break;
    case TargetKind::HPolytope:
        if (std::holds_alternative<HPolytope>(x)) {
            return x;
        }
        if (is_hyperrectangular(x)) {
            return HPolytope(constraints_list(x, ctx), dim(x), BoundednessCheck::Skip);
        }
        if (planar2 && (std::holds_alternative<VPolygon>(x) || std::holds_alternative<VPolytope>(x) ||
                        std::holds_alternative<Zonotope>(x))) {
            return tohrep(x, ctx);
        }
        break;
    case TargetKind::VPolygon:
        if (!planar2) {
            break;
        }
        if (std::holds_alternative<VPolygon>(x)) {
            return x;
        }
        if (std::holds_alternative<HPolytope>(x)) {
            return tovrep(x, ctx);
        }
        if (is_zonotopic(x) || std::holds_alternative<VPolytope>(x)) {
            return VPolygon(vertices_list(x, ctx), ctx);
        }
        break;
    }
    unsupported(target, kind_name(x));
}

HPolytope tohrep(const ConcreteSet& x, const ToleranceContext& ctx) {
    require_planar(x, "tohrep");
    if (is_h_type(x) && !is_bounded(x, ctx)) {
        throw UnboundedError("tohrep needs a bounded set");
    }
    const std::vector<Vector> hull = planar::convex_hull(vertices_list(x, ctx), ctx);
    if (hull.size() < 3) {
        throw InvalidArgument("degenerate polygon: " + std::to_string(hull.size()) +
                              " distinct non-collinear vertices, at least 3 are needed for a constraint representation");
    }
    std::vector<HalfSpace> constraints;
    for (const auto& c : planar::edge_constraints(hull)) {
        constraints.emplace_back(c.normal, c.offset);
    }
    return HPolytope(std::move(constraints), 2, BoundednessCheck::Skip);
}

VPolygon tovrep(const ConcreteSet& x, const ToleranceContext& ctx) {
    require_planar(x, "tovrep");
    if (!is_h_type(x)) {
        return VPolygon(vertices_list(x, ctx), ctx);
    }
    if (is_empty(x, ctx)) {
        throw EmptySetError("tovrep of an empty polyhedron");
    }
    if (!is_bounded(x, ctx)) {
        throw UnboundedError("tovrep of an unbounded polyhedron");
    }
    std::vector<LinearConstraint> lin;
    for (const auto& h : constraints_list(x, ctx)) {
        lin.push_back(h.as_constraint());
    }
    return VPolygon(planar::halfplane_vertices(lin, ctx), ctx);
}

}  // namespace setcalc
