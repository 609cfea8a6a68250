#pragma once

#include "setcalc/lazy.hpp"

#include <optional>
#include <string_view>

namespace setcalc {

enum class TargetKind { Hyperrectangle, Zonotope, HPolytope, VPolygon };

std::string_view target_name(TargetKind kind);
std::optional<TargetKind> target_from_name(std::string_view name);

/// Exact representation change. Lossy or unknown pairs throw
/// UnsupportedOperation; the approximation functions are the lossy path.
/// A lazy Cartesian product of zonotopic operands converts to Zonotope.
ConcreteSet convert_to(TargetKind target, const SetExpr& x, const ToleranceContext& ctx = default_tolerance());

/// Constraint form of a bounded 2-D polytope, one constraint per edge.
/// Throws InvalidArgument when the vertices are collinear.
HPolytope tohrep(const ConcreteSet& x, const ToleranceContext& ctx = default_tolerance());

/// Vertex form of a bounded, nonempty 2-D polyhedron.
VPolygon tovrep(const ConcreteSet& x, const ToleranceContext& ctx = default_tolerance());

}  // namespace setcalc
