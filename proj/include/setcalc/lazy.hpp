#pragma once

#include "setcalc/sets.hpp"

#include <concepts>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace setcalc {

enum class LazyKind {
    MinkowskiSum,
    MinkowskiSumArray,
    Intersection,
    CartesianProduct,
    ConvexHullUnion,
    LinearMap,
    AffineMap,
    Translation,
    SymmetricIntervalHull,
    Union,
    Complement,
};

std::string_view kind_name(LazyKind kind);
std::optional<LazyKind> lazy_kind_from_name(std::string_view name);

class LazyNode;

/// A set expression: either a concrete set or an unevaluated operation over
/// other expressions. Cheap to copy; the referenced data is shared and
/// immutable.
class SetExpr {
public:
    SetExpr(ConcreteSet set);  // NOLINT(google-explicit-constructor)

    template <class T>
        requires(!std::same_as<std::remove_cvref_t<T>, ConcreteSet> &&
                 !std::same_as<std::remove_cvref_t<T>, SetExpr> && std::constructible_from<ConcreteSet, T>)
    SetExpr(T&& set)  // NOLINT(google-explicit-constructor)
        : SetExpr(ConcreteSet(std::forward<T>(set))) {}

    explicit SetExpr(std::shared_ptr<const LazyNode> node);

    bool is_concrete() const { return concrete_ != nullptr; }
    bool is_lazy() const { return node_ != nullptr; }

    /// Throws UnsupportedOperation when the expression is lazy.
    const ConcreteSet& concrete() const;
    /// Throws UnsupportedOperation when the expression is concrete.
    const LazyNode& node() const;

    Eigen::Index dim() const;

private:
    std::shared_ptr<const ConcreteSet> concrete_;
    std::shared_ptr<const LazyNode> node_;
};

/// Optional matrix / vector payload of map and translation nodes.
struct NodePayload {
    std::optional<Matrix> matrix;
    std::optional<Vector> vector;
};

/// Immutable operation node. Construct through make_node or the lazy::
/// builders; they validate operand dimensions.
class LazyNode {
public:
    LazyKind kind() const { return kind_; }
    const std::vector<SetExpr>& operands() const { return operands_; }
    const std::optional<Matrix>& matrix() const { return matrix_; }
    const std::optional<Vector>& vector() const { return vector_; }
    Eigen::Index dim() const { return dim_; }

private:
    friend SetExpr make_node(LazyKind kind, std::vector<SetExpr> operands, NodePayload payload);
    LazyNode() = default;

    LazyKind kind_ = LazyKind::MinkowskiSum;
    std::vector<SetExpr> operands_;
    std::optional<Matrix> matrix_;
    std::optional<Vector> vector_;
    Eigen::Index dim_ = 0;
};

/// Wraps operands in a new node; no set computation happens here.
/// Throws DimensionMismatch or InvalidArgument when operands/payload do not
/// fit the kind.
SetExpr make_node(LazyKind kind, std::vector<SetExpr> operands, NodePayload payload = {});

namespace lazy {

SetExpr minkowski_sum(SetExpr a, SetExpr b);
/// Flat n-ary sum.
SetExpr minkowski_sum_array(std::vector<SetExpr> operands);
SetExpr intersection(SetExpr a, SetExpr b);
SetExpr cartesian_product(SetExpr a, SetExpr b);
SetExpr convex_hull(SetExpr a, SetExpr b);
SetExpr linear_map(Matrix m, SetExpr x);
/// lambda * X as a linear map with lambda * I.
SetExpr scale(double lambda, SetExpr x);
SetExpr affine_map(Matrix m, Vector v, SetExpr x);
SetExpr translation(SetExpr x, Vector v);
SetExpr symmetric_interval_hull(SetExpr x);
SetExpr set_union(SetExpr a, SetExpr b);
SetExpr complement(SetExpr x);

}  // namespace lazy

/// Number of operation levels above the deepest leaf (0 for a leaf).
std::size_t depth(const SetExpr& expr);

/// Exact structural equality of two trees, including all numeric parameters.
bool structurally_equal(const SetExpr& a, const SetExpr& b);

enum class QueryMode {
    /// Fail with UnsupportedOperation where no exact rule applies.
    Exact,
    /// Allow upper bounds: a lazy intersection without an exact rule
    /// returns min(rho(d, X), rho(d, Y)).
    Overapproximate,
};

/// rho(d, T) by recursive support-function calculus. +infinity when T is
/// unbounded along d.
double lazy_support_function(const Vector& direction, const SetExpr& expr, QueryMode mode = QueryMode::Exact,
                             const ToleranceContext& ctx = default_tolerance());

/// A maximizer consistent with lazy_support_function. Exact mode only.
Vector lazy_support_vector(const Vector& direction, const SetExpr& expr,
                           const ToleranceContext& ctx = default_tolerance());

/// Exact membership on the fragment {Union, Intersection, Complement,
/// Translation, invertible LinearMap/AffineMap, CartesianProduct,
/// MinkowskiSum with a singleton operand}.
bool lazy_membership(const Vector& point, const SetExpr& expr, const ToleranceContext& ctx = default_tolerance());

/// True when every node preserves zonotopes (sum, map, translation,
/// product) and every leaf is zonotopic.
bool is_zonotope_preserving(const SetExpr& expr);

/// Evaluate the tree into a concrete set. Zonotope-preserving trees give a
/// zonotopic set in any dimension; other 2-D trees over polytopic leaves
/// give a VPolygon (or an HPolyhedron when an intersection with unbounded
/// operands stays unbounded).
ConcreteSet concretize(const SetExpr& expr, const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc
