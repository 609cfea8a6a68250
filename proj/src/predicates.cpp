#include "setcalc/concrete_ops.hpp"

#include "setcalc/errors.hpp"

#include <string>

namespace setcalc {

namespace {

void require_same_dim(const SetExpr& x, const SetExpr& y, const char* what) {
    if (x.dim() != y.dim()) {
        throw DimensionMismatch(std::string(what) + ": operand dimensions " + std::to_string(x.dim()) + " and " +
                                std::to_string(y.dim()) + " do not match");
    }
}

std::vector<LinearConstraint> linear(const std::vector<HalfSpace>& constraints) {
    std::vector<LinearConstraint> out;
    out.reserve(constraints.size());
    for (const auto& h : constraints) {
        out.push_back(h.as_constraint());
    }
    return out;
}

bool has_constraints(const ConcreteSet& x) {
    return !std::holds_alternative<Zonotope>(x) || dim(x) <= 2;
}

bool box_disjoint(const Hyperrectangle& a, const Hyperrectangle& b, const ToleranceContext& ctx) {
    const Vector gap1 = b.low() - a.high();
    const Vector gap2 = a.low() - b.high();
    return gap1.maxCoeff() > ctx.atol() || gap2.maxCoeff() > ctx.atol();
}

// X n {a.x <= b} is empty iff min_{x in X} a.x > b.
bool halfspace_disjoint(const HalfSpace& h, const SetExpr& x, const ToleranceContext& ctx) {
    const double lowest = -lazy_support_function(-h.normal(), x, QueryMode::Exact, ctx);
    return lowest > h.offset() + ctx.atol();
}

bool hyperplane_disjoint(const Hyperplane& h, const SetExpr& x, const ToleranceContext& ctx) {
    const double lowest = -lazy_support_function(-h.normal(), x, QueryMode::Exact, ctx);
    const double highest = lazy_support_function(h.normal(), x, QueryMode::Exact, ctx);
    return lowest > h.offset() + ctx.atol() || highest < h.offset() - ctx.atol();
}

}  // namespace

bool is_empty(const ConcreteSet& x, const ToleranceContext& ctx) {
    if (const auto* p = std::get_if<VPolygon>(&x)) {
        return p->vertices().empty();
    }
    if (const auto* p = std::get_if<VPolytope>(&x)) {
        return p->vertices().empty();
    }
    if (const auto* p = std::get_if<HPolyhedron>(&x)) {
        return !is_feasible(p->linear_constraints(), ctx);
    }
    if (const auto* p = std::get_if<HPolytope>(&x)) {
        return !is_feasible(p->linear_constraints(), ctx);
    }
    return false;
}

bool is_subset(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx) {
    require_same_dim(x, y, "is_subset");
    if (x.is_concrete() && is_empty(x.concrete(), ctx)) {
        return true;
    }
    const ConcreteSet target = y.is_concrete() ? y.concrete() : concretize(y, ctx);
    const std::vector<HalfSpace> constraints = constraints_list(target, ctx);
    try {
        for (const auto& h : constraints) {
            const double rho = lazy_support_function(h.normal(), x, QueryMode::Exact, ctx);
            if (!approx_le(rho, h.offset(), ctx)) {
                return false;
            }
        }
    } catch (const EmptySetError&) {
        return true;
    }
    return true;
}

bool is_disjoint(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx) {
    require_same_dim(x, y, "is_disjoint");

    // Half-space and hyperplane tests only need support queries on the other
    // operand, which may stay lazy.
    for (int swap = 0; swap < 2; ++swap) {
        const SetExpr& a = swap == 0 ? x : y;
        const SetExpr& b = swap == 0 ? y : x;
        if (!a.is_concrete()) {
            continue;
        }
        if (const auto* h = std::get_if<HalfSpace>(&a.concrete())) {
            return halfspace_disjoint(*h, b, ctx);
        }
        if (const auto* h = std::get_if<Hyperplane>(&a.concrete())) {
            return hyperplane_disjoint(*h, b, ctx);
        }
    }

    const ConcreteSet cx = x.is_concrete() ? x.concrete() : concretize(x, ctx);
    const ConcreteSet cy = y.is_concrete() ? y.concrete() : concretize(y, ctx);
    if (is_hyperrectangular(cx) && is_hyperrectangular(cy)) {
        return box_disjoint(as_hyperrectangle(cx), as_hyperrectangle(cy), ctx);
    }
    if (has_constraints(cx) && has_constraints(cy)) {
        std::vector<LinearConstraint> joint = linear(constraints_list(cx, ctx));
        const std::vector<LinearConstraint> more = linear(constraints_list(cy, ctx));
        joint.insert(joint.end(), more.begin(), more.end());
        return !is_feasible(joint, ctx);
    }
    throw UnsupportedOperation("is_disjoint is not implemented for " + std::string(kind_name(cx)) + " and " +
                               std::string(kind_name(cy)));
}

bool is_equivalent(const SetExpr& x, const SetExpr& y, const ToleranceContext& ctx) {
    return is_subset(x, y, ctx) && is_subset(y, x, ctx);
}

}  // namespace setcalc
