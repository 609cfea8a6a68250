#include "setcalc/lazy.hpp"

#include "setcalc/concrete_ops.hpp"
#include "setcalc/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace setcalc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::pair<LazyKind, std::string_view>, 11> kKindNames{{
    {LazyKind::MinkowskiSum, "MinkowskiSum"},
    {LazyKind::MinkowskiSumArray, "MinkowskiSumArray"},
    {LazyKind::Intersection, "Intersection"},
    {LazyKind::CartesianProduct, "CartesianProduct"},
    {LazyKind::ConvexHullUnion, "ConvexHull"},
    {LazyKind::LinearMap, "LinearMap"},
    {LazyKind::AffineMap, "AffineMap"},
    {LazyKind::Translation, "Translation"},
    {LazyKind::SymmetricIntervalHull, "SymmetricIntervalHull"},
    {LazyKind::Union, "Union"},
    {LazyKind::Complement, "Complement"},
}};

std::string dims_message(const char* what, Eigen::Index a, Eigen::Index b) {
    return std::string(what) + ": operand dimensions " + std::to_string(a) + " and " + std::to_string(b) +
           " do not match";
}

void require_arity(LazyKind kind, const std::vector<SetExpr>& operands, std::size_t arity) {
    if (operands.size() != arity) {
        throw InvalidArgument(std::string(kind_name(kind)) + " takes " + std::to_string(arity) + " operand(s), got " +
                              std::to_string(operands.size()));
    }
}

void require_no_payload(LazyKind kind, const NodePayload& payload) {
    if (payload.matrix || payload.vector) {
        throw InvalidArgument(std::string(kind_name(kind)) + " does not take a matrix or vector payload");
    }
}

Eigen::Index equal_dims(LazyKind kind, const std::vector<SetExpr>& operands) {
    const Eigen::Index n = operands.front().dim();
    for (const auto& op : operands) {
        if (op.dim() != n) {
            throw DimensionMismatch(dims_message(kind_name(kind).data(), n, op.dim()));
        }
    }
    return n;
}

Vector unit(Eigen::Index n, Eigen::Index i, double sign = 1.0) {
    Vector e = Vector::Zero(n);
    e[i] = sign;
    return e;
}

void require_direction(const Vector& d, const SetExpr& expr) {
    if (d.size() != expr.dim()) {
        throw DimensionMismatch("direction has dimension " + std::to_string(d.size()) + " but the set has dimension " +
                                std::to_string(expr.dim()));
    }
}

bool is_singleton(const SetExpr& expr) {
    if (!expr.is_concrete()) {
        return false;
    }
    const ConcreteSet& s = expr.concrete();
    if (is_hyperrectangular(s)) {
        return as_hyperrectangle(s).radius().isZero(0.0);
    }
    if (const auto* z = std::get_if<Zonotope>(&s)) {
        return z->generators().isZero(0.0);
    }
    if (const auto* p = std::get_if<VPolygon>(&s)) {
        return p->vertices().size() == 1;
    }
    if (const auto* p = std::get_if<VPolytope>(&s)) {
        return p->vertices().size() == 1;
    }
    return false;
}

Vector singleton_point(const SetExpr& expr) { return an_element(expr.concrete()); }

Hyperrectangle symmetric_box(const SetExpr& child, QueryMode mode, const ToleranceContext& ctx) {
    const Eigen::Index n = child.dim();
    Vector radius(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double hi = lazy_support_function(unit(n, i), child, mode, ctx);
        const double lo = lazy_support_function(unit(n, i, -1.0), child, mode, ctx);
        radius[i] = std::max(std::abs(hi), std::abs(lo));
        if (!std::isfinite(radius[i])) {
            throw UnboundedError("symmetric interval hull of an unbounded set");
        }
    }
    return {Vector::Zero(n), radius};
}

// Constraint description of an expression, when one is available without
// approximation.
std::optional<std::vector<LinearConstraint>> exact_constraints(const SetExpr& expr, const ToleranceContext& ctx) {
    std::vector<LinearConstraint> out;
    if (expr.is_lazy() && expr.node().kind() == LazyKind::Intersection) {
        for (const auto& op : expr.node().operands()) {
            auto part = exact_constraints(op, ctx);
            if (!part) {
                return std::nullopt;
            }
            out.insert(out.end(), part->begin(), part->end());
        }
        return out;
    }
    try {
        const ConcreteSet set = expr.is_concrete() ? expr.concrete() : concretize(expr, ctx);
        for (const auto& h : constraints_list(set, ctx)) {
            out.push_back(h.as_constraint());
        }
        return out;
    } catch (const UnsupportedOperation&) {
        return std::nullopt;
    }
}

LpOutcome intersection_lp(const Vector& d, const SetExpr& expr, const ToleranceContext& ctx) {
    auto constraints = exact_constraints(expr, ctx);
    if (!constraints) {
        throw UnsupportedOperation(
            "exact support of a lazy intersection requires polyhedral operands; use the overapproximate query mode");
    }
    LpOutcome out = solve_lp({d, std::move(*constraints)}, ctx);
    if (out.status == LpStatus::Infeasible) {
        throw EmptySetError("support query on an empty intersection");
    }
    return out;
}

}  // namespace

std::string_view kind_name(LazyKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "Unknown";
}

std::optional<LazyKind> lazy_kind_from_name(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    if (name == "ConvexHullUnion") {
        return LazyKind::ConvexHullUnion;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SetExpr
// ---------------------------------------------------------------------------

SetExpr::SetExpr(ConcreteSet set) : concrete_(std::make_shared<const ConcreteSet>(std::move(set))) {}

SetExpr::SetExpr(std::shared_ptr<const LazyNode> node) : node_(std::move(node)) {
    if (!node_) {
        throw InvalidArgument("null lazy node");
    }
}

const ConcreteSet& SetExpr::concrete() const {
    if (!concrete_) {
        throw UnsupportedOperation("expression is a lazy " + std::string(kind_name(node_->kind())) +
                                   " node, not a concrete set");
    }
    return *concrete_;
}

const LazyNode& SetExpr::node() const {
    if (!node_) {
        throw UnsupportedOperation("expression is a concrete set, not a lazy node");
    }
    return *node_;
}

Eigen::Index SetExpr::dim() const { return concrete_ ? setcalc::dim(*concrete_) : node_->dim(); }

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

SetExpr make_node(LazyKind kind, std::vector<SetExpr> operands, NodePayload payload) {
    if (operands.empty()) {
        throw InvalidArgument(std::string(kind_name(kind)) + " needs at least one operand");
    }
    std::shared_ptr<LazyNode> node(new LazyNode());
    switch (kind) {
    case LazyKind::MinkowskiSum:
    case LazyKind::Intersection:
    case LazyKind::ConvexHullUnion:
    case LazyKind::Union:
        require_arity(kind, operands, 2);
        require_no_payload(kind, payload);
        node->dim_ = equal_dims(kind, operands);
        break;
    case LazyKind::MinkowskiSumArray:
        require_no_payload(kind, payload);
        node->dim_ = equal_dims(kind, operands);
        break;
    case LazyKind::CartesianProduct:
        require_arity(kind, operands, 2);
        require_no_payload(kind, payload);
        node->dim_ = operands[0].dim() + operands[1].dim();
        break;
    case LazyKind::LinearMap:
    case LazyKind::AffineMap: {
        require_arity(kind, operands, 1);
        if (!payload.matrix) {
            throw InvalidArgument(std::string(kind_name(kind)) + " needs a matrix");
        }
        const Matrix& m = *payload.matrix;
        if (m.cols() != operands[0].dim()) {
            throw DimensionMismatch(std::string(kind_name(kind)) + ": matrix has " + std::to_string(m.cols()) +
                                    " columns but the operand has dimension " + std::to_string(operands[0].dim()));
        }
        if (m.rows() < 1 || !m.allFinite()) {
            throw InvalidArgument(std::string(kind_name(kind)) + ": matrix must be finite with at least one row");
        }
        if (kind == LazyKind::LinearMap && payload.vector) {
            throw InvalidArgument("LinearMap does not take a vector; use AffineMap");
        }
        if (kind == LazyKind::AffineMap) {
            if (!payload.vector) {
                throw InvalidArgument("AffineMap needs a vector");
            }
            if (payload.vector->size() != m.rows()) {
                throw DimensionMismatch("AffineMap: vector has dimension " + std::to_string(payload.vector->size()) +
                                        " but the matrix has " + std::to_string(m.rows()) + " rows");
            }
        }
        node->dim_ = m.rows();
        break;
    }
    case LazyKind::Translation:
        require_arity(kind, operands, 1);
        if (!payload.vector || payload.matrix) {
            throw InvalidArgument("Translation needs exactly a vector payload");
        }
        if (payload.vector->size() != operands[0].dim()) {
            throw DimensionMismatch(dims_message("Translation", operands[0].dim(), payload.vector->size()));
        }
        node->dim_ = operands[0].dim();
        break;
    case LazyKind::SymmetricIntervalHull:
    case LazyKind::Complement:
        require_arity(kind, operands, 1);
        require_no_payload(kind, payload);
        node->dim_ = operands[0].dim();
        break;
    }
    if (payload.vector && !payload.vector->allFinite()) {
        throw InvalidArgument(std::string(kind_name(kind)) + ": vector must be finite");
    }
    node->kind_ = kind;
    node->operands_ = std::move(operands);
    node->matrix_ = std::move(payload.matrix);
    node->vector_ = std::move(payload.vector);
    return SetExpr(std::shared_ptr<const LazyNode>(std::move(node)));
}

namespace lazy {

SetExpr minkowski_sum(SetExpr a, SetExpr b) { return make_node(LazyKind::MinkowskiSum, {std::move(a), std::move(b)}); }

SetExpr minkowski_sum_array(std::vector<SetExpr> operands) {
    std::vector<SetExpr> flat;
    for (auto& op : operands) {
        if (op.is_lazy() &&
            (op.node().kind() == LazyKind::MinkowskiSum || op.node().kind() == LazyKind::MinkowskiSumArray)) {
            for (const auto& inner : op.node().operands()) {
                flat.push_back(inner);
            }
        } else {
            flat.push_back(std::move(op));
        }
    }
    return make_node(LazyKind::MinkowskiSumArray, std::move(flat));
}

SetExpr intersection(SetExpr a, SetExpr b) { return make_node(LazyKind::Intersection, {std::move(a), std::move(b)}); }

SetExpr cartesian_product(SetExpr a, SetExpr b) {
    return make_node(LazyKind::CartesianProduct, {std::move(a), std::move(b)});
}

SetExpr convex_hull(SetExpr a, SetExpr b) {
    return make_node(LazyKind::ConvexHullUnion, {std::move(a), std::move(b)});
}

SetExpr linear_map(Matrix m, SetExpr x) {
    return make_node(LazyKind::LinearMap, {std::move(x)}, {std::move(m), std::nullopt});
}

SetExpr scale(double lambda, SetExpr x) {
    const Eigen::Index n = x.dim();
    return linear_map(lambda * Matrix::Identity(n, n), std::move(x));
}

SetExpr affine_map(Matrix m, Vector v, SetExpr x) {
    return make_node(LazyKind::AffineMap, {std::move(x)}, {std::move(m), std::move(v)});
}

SetExpr translation(SetExpr x, Vector v) {
    return make_node(LazyKind::Translation, {std::move(x)}, {std::nullopt, std::move(v)});
}

SetExpr symmetric_interval_hull(SetExpr x) { return make_node(LazyKind::SymmetricIntervalHull, {std::move(x)}); }

SetExpr set_union(SetExpr a, SetExpr b) { return make_node(LazyKind::Union, {std::move(a), std::move(b)}); }

SetExpr complement(SetExpr x) { return make_node(LazyKind::Complement, {std::move(x)}); }

}  // namespace lazy

std::size_t depth(const SetExpr& expr) {
    if (expr.is_concrete()) {
        return 0;
    }
    std::size_t deepest = 0;
    for (const auto& op : expr.node().operands()) {
        deepest = std::max(deepest, depth(op));
    }
    return deepest + 1;
}

namespace {

bool same_vectors(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Vector& x, const Vector& y) {
               return x.size() == y.size() && x == y;
           });
}

bool same_matrix(const Matrix& a, const Matrix& b) { return a.rows() == b.rows() && a.cols() == b.cols() && a == b; }

bool same_vector(const Vector& a, const Vector& b) { return a.size() == b.size() && a == b; }

bool same_constraints(const std::vector<HalfSpace>& a, const std::vector<HalfSpace>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const HalfSpace& x, const HalfSpace& y) {
               return same_vector(x.normal(), y.normal()) && x.offset() == y.offset();
           });
}

bool same_concrete(const ConcreteSet& a, const ConcreteSet& b) {
    if (a.index() != b.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, HalfSpace> || std::is_same_v<T, Hyperplane>) {
                return same_vector(x.normal(), y.normal()) && x.offset() == y.offset();
            } else if constexpr (std::is_same_v<T, Hyperrectangle>) {
                return same_vector(x.center(), y.center()) && same_vector(x.radius(), y.radius());
            } else if constexpr (std::is_same_v<T, BallInf>) {
                return same_vector(x.center(), y.center()) && x.radius() == y.radius();
            } else if constexpr (std::is_same_v<T, Interval>) {
                return x.lo() == y.lo() && x.hi() == y.hi();
            } else if constexpr (std::is_same_v<T, Zonotope>) {
                return same_vector(x.center(), y.center()) && same_matrix(x.generators(), y.generators());
            } else if constexpr (std::is_same_v<T, HPolyhedron> || std::is_same_v<T, HPolytope>) {
                return x.dim() == y.dim() && same_constraints(x.constraints(), y.constraints());
            } else {
                return x.dim() == y.dim() && same_vectors(x.vertices(), y.vertices());
            }
        },
        a);
}

}  // namespace

bool structurally_equal(const SetExpr& a, const SetExpr& b) {
    if (a.is_concrete() != b.is_concrete()) {
        return false;
    }
    if (a.is_concrete()) {
        return same_concrete(a.concrete(), b.concrete());
    }
    const LazyNode& x = a.node();
    const LazyNode& y = b.node();
    if (x.kind() != y.kind() || x.operands().size() != y.operands().size()) {
        return false;
    }
    if (x.matrix().has_value() != y.matrix().has_value() || x.vector().has_value() != y.vector().has_value()) {
        return false;
    }
    if (x.matrix() && !same_matrix(*x.matrix(), *y.matrix())) {
        return false;
    }
    if (x.vector() && !same_vector(*x.vector(), *y.vector())) {
        return false;
    }
    for (std::size_t i = 0; i < x.operands().size(); ++i) {
        if (!structurally_equal(x.operands()[i], y.operands()[i])) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Support-function calculus
// ---------------------------------------------------------------------------

double lazy_support_function(const Vector& d, const SetExpr& expr, QueryMode mode, const ToleranceContext& ctx) {
    require_direction(d, expr);
    if (expr.is_concrete()) {
        return support_function(d, expr.concrete(), ctx);
    }
    const LazyNode& node = expr.node();
    const auto& ops = node.operands();
    switch (node.kind()) {
    case LazyKind::MinkowskiSum:
        return lazy_support_function(d, ops[0], mode, ctx) + lazy_support_function(d, ops[1], mode, ctx);
    case LazyKind::MinkowskiSumArray: {
        double total = lazy_support_function(d, ops[0], mode, ctx);
        for (std::size_t i = 1; i < ops.size(); ++i) {
            total += lazy_support_function(d, ops[i], mode, ctx);
        }
        return total;
    }
    case LazyKind::CartesianProduct: {
        const Eigen::Index n1 = ops[0].dim();
        return lazy_support_function(d.head(n1), ops[0], mode, ctx) +
               lazy_support_function(d.tail(d.size() - n1), ops[1], mode, ctx);
    }
    case LazyKind::ConvexHullUnion:
    case LazyKind::Union:
        return std::max(lazy_support_function(d, ops[0], mode, ctx), lazy_support_function(d, ops[1], mode, ctx));
    case LazyKind::LinearMap:
        return lazy_support_function(node.matrix()->transpose() * d, ops[0], mode, ctx);
    case LazyKind::AffineMap:
        return lazy_support_function(node.matrix()->transpose() * d, ops[0], mode, ctx) + d.dot(*node.vector());
    case LazyKind::Translation:
        return lazy_support_function(d, ops[0], mode, ctx) + d.dot(*node.vector());
    case LazyKind::SymmetricIntervalHull:
        return d.cwiseAbs().dot(symmetric_box(ops[0], mode, ctx).radius());
    case LazyKind::Intersection: {
        if (mode == QueryMode::Overapproximate) {
            if (auto constraints = exact_constraints(expr, ctx)) {
                const LpOutcome out = solve_lp({d, std::move(*constraints)}, ctx);
                if (out.status == LpStatus::Infeasible) {
                    throw EmptySetError("support query on an empty intersection");
                }
                return out.optimal() ? *out.optimum : kInf;
            }
            return std::min(lazy_support_function(d, ops[0], mode, ctx), lazy_support_function(d, ops[1], mode, ctx));
        }
        const LpOutcome out = intersection_lp(d, expr, ctx);
        return out.optimal() ? *out.optimum : kInf;
    }
    case LazyKind::Complement:
        throw UnsupportedOperation("the support function of a complement is not defined");
    }
    throw UnsupportedOperation("unknown lazy node kind");
}

Vector lazy_support_vector(const Vector& d, const SetExpr& expr, const ToleranceContext& ctx) {
    require_direction(d, expr);
    if (expr.is_concrete()) {
        return support_vector(d, expr.concrete(), ctx);
    }
    const LazyNode& node = expr.node();
    const auto& ops = node.operands();
    switch (node.kind()) {
    case LazyKind::MinkowskiSum:
        return lazy_support_vector(d, ops[0], ctx) + lazy_support_vector(d, ops[1], ctx);
    case LazyKind::MinkowskiSumArray: {
        Vector total = lazy_support_vector(d, ops[0], ctx);
        for (std::size_t i = 1; i < ops.size(); ++i) {
            total += lazy_support_vector(d, ops[i], ctx);
        }
        return total;
    }
    case LazyKind::CartesianProduct: {
        const Eigen::Index n1 = ops[0].dim();
        return concat(lazy_support_vector(d.head(n1), ops[0], ctx),
                      lazy_support_vector(d.tail(d.size() - n1), ops[1], ctx));
    }
    case LazyKind::ConvexHullUnion:
    case LazyKind::Union: {
        const double left = lazy_support_function(d, ops[0], QueryMode::Exact, ctx);
        const double right = lazy_support_function(d, ops[1], QueryMode::Exact, ctx);
        return lazy_support_vector(d, left >= right ? ops[0] : ops[1], ctx);
    }
    case LazyKind::LinearMap:
        return *node.matrix() * lazy_support_vector(node.matrix()->transpose() * d, ops[0], ctx);
    case LazyKind::AffineMap:
        return *node.matrix() * lazy_support_vector(node.matrix()->transpose() * d, ops[0], ctx) + *node.vector();
    case LazyKind::Translation:
        return lazy_support_vector(d, ops[0], ctx) + *node.vector();
    case LazyKind::SymmetricIntervalHull:
        return support_vector(d, symmetric_box(ops[0], QueryMode::Exact, ctx), ctx);
    case LazyKind::Intersection: {
        const LpOutcome out = intersection_lp(d, expr, ctx);
        if (!out.optimal()) {
            throw UnboundedError("intersection is unbounded in the query direction");
        }
        return *out.optimizer;
    }
    case LazyKind::Complement:
        throw UnsupportedOperation("the support vector of a complement is not defined");
    }
    throw UnsupportedOperation("unknown lazy node kind");
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool lazy_membership(const Vector& x, const SetExpr& expr, const ToleranceContext& ctx) {
    if (x.size() != expr.dim()) {
        throw DimensionMismatch("point has dimension " + std::to_string(x.size()) + " but the set has dimension " +
                                std::to_string(expr.dim()));
    }
    if (expr.is_concrete()) {
        return membership(x, expr.concrete(), ctx);
    }
    const LazyNode& node = expr.node();
    const auto& ops = node.operands();
    auto invert = [&](const Vector& y) -> Vector {
        const Matrix& m = *node.matrix();
        if (m.rows() != m.cols()) {
            throw UnsupportedOperation("membership in a non-square linear map is not supported");
        }
        Eigen::FullPivLU<Matrix> lu(m);
        if (!lu.isInvertible()) {
            throw UnsupportedOperation("membership in a singular linear map is not supported");
        }
        return lu.solve(y);
    };
    switch (node.kind()) {
    case LazyKind::Union:
        return std::any_of(ops.begin(), ops.end(), [&](const SetExpr& op) { return lazy_membership(x, op, ctx); });
    case LazyKind::Intersection:
        return std::all_of(ops.begin(), ops.end(), [&](const SetExpr& op) { return lazy_membership(x, op, ctx); });
    case LazyKind::Complement:
        return !lazy_membership(x, ops[0], ctx);
    case LazyKind::Translation:
        return lazy_membership(x - *node.vector(), ops[0], ctx);
    case LazyKind::LinearMap:
        return lazy_membership(invert(x), ops[0], ctx);
    case LazyKind::AffineMap:
        return lazy_membership(invert(x - *node.vector()), ops[0], ctx);
    case LazyKind::CartesianProduct: {
        const Eigen::Index n1 = ops[0].dim();
        return lazy_membership(x.head(n1), ops[0], ctx) && lazy_membership(x.tail(x.size() - n1), ops[1], ctx);
    }
    case LazyKind::MinkowskiSum:
    case LazyKind::MinkowskiSumArray: {
        Vector shifted = x;
        const SetExpr* rest = nullptr;
        for (const auto& op : ops) {
            if (rest == nullptr && !is_singleton(op)) {
                rest = &op;
            } else if (is_singleton(op)) {
                shifted -= singleton_point(op);
            } else {
                throw UnsupportedOperation("membership in a Minkowski sum needs all but one operand to be a singleton");
            }
        }
        if (rest == nullptr) {
            // Every operand was a singleton; the first one was subtracted too.
            return shifted.cwiseAbs().maxCoeff() <= ctx.atol();
        }
        return lazy_membership(shifted, *rest, ctx);
    }
    case LazyKind::ConvexHullUnion:
    case LazyKind::SymmetricIntervalHull:
        break;
    }
    throw UnsupportedOperation("membership in a lazy " + std::string(kind_name(node.kind())) + " is not supported");
}

// ---------------------------------------------------------------------------
// Concretization
// ---------------------------------------------------------------------------

bool is_zonotope_preserving(const SetExpr& expr) {
    if (expr.is_concrete()) {
        return is_zonotopic(expr.concrete());
    }
    switch (expr.node().kind()) {
    case LazyKind::MinkowskiSum:
    case LazyKind::MinkowskiSumArray:
    case LazyKind::LinearMap:
    case LazyKind::AffineMap:
    case LazyKind::Translation:
    case LazyKind::CartesianProduct:
        break;
    default:
        return false;
    }
    const auto& ops = expr.node().operands();
    return std::all_of(ops.begin(), ops.end(), [](const SetExpr& op) { return is_zonotope_preserving(op); });
}

namespace {

ConcreteSet evaluate(const SetExpr& expr, const ToleranceContext& ctx) {
    if (expr.is_concrete()) {
        return expr.concrete();
    }
    const LazyNode& node = expr.node();
    const auto& ops = node.operands();
    switch (node.kind()) {
    case LazyKind::MinkowskiSum:
    case LazyKind::MinkowskiSumArray: {
        ConcreteSet total = evaluate(ops[0], ctx);
        for (std::size_t i = 1; i < ops.size(); ++i) {
            total = minkowski_sum(total, evaluate(ops[i], ctx), ctx);
        }
        return total;
    }
    case LazyKind::CartesianProduct:
        return cartesian_product(evaluate(ops[0], ctx), evaluate(ops[1], ctx));
    case LazyKind::ConvexHullUnion:
        return convex_hull_union(evaluate(ops[0], ctx), evaluate(ops[1], ctx), ctx);
    case LazyKind::LinearMap:
        return linear_map(*node.matrix(), evaluate(ops[0], ctx), ctx);
    case LazyKind::AffineMap:
        return translate(linear_map(*node.matrix(), evaluate(ops[0], ctx), ctx), *node.vector());
    case LazyKind::Translation:
        return translate(evaluate(ops[0], ctx), *node.vector());
    case LazyKind::SymmetricIntervalHull:
        return symmetric_box(ops[0], QueryMode::Exact, ctx);
    case LazyKind::Intersection: {
        const ConcreteSet a = evaluate(ops[0], ctx);
        const ConcreteSet b = evaluate(ops[1], ctx);
        try {
            return intersection(a, b, {}, ctx);
        } catch (const UnsupportedOperation&) {
            std::vector<HalfSpace> joint = constraints_list(a, ctx);
            const std::vector<HalfSpace> more = constraints_list(b, ctx);
            joint.insert(joint.end(), more.begin(), more.end());
            return HPolyhedron(std::move(joint), node.dim());
        }
    }
    case LazyKind::Union:
        throw UnsupportedOperation("a union of sets is not convex and cannot be concretized");
    case LazyKind::Complement:
        throw UnsupportedOperation("a complement cannot be concretized");
    }
    throw UnsupportedOperation("unknown lazy node kind");
}

}  // namespace

ConcreteSet concretize(const SetExpr& expr, const ToleranceContext& ctx) {
    if (expr.is_concrete()) {
        return expr.concrete();
    }
    ConcreteSet result = evaluate(expr, ctx);
    if (expr.dim() == 2 && !is_zonotope_preserving(expr) && !std::holds_alternative<VPolygon>(result) &&
        is_bounded(result, ctx)) {
        return VPolygon(vertices_list(result, ctx), ctx);
    }
    return result;
}

}  // namespace setcalc
