#pragma once

#include "setcalc/errors.hpp"
#include "setcalc/lazy.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace setcalc::io {

inline constexpr std::string_view kDocumentVersion = "setcalc/1";

/// Malformed document text or structure.
class DocumentError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Document layout
//
//   leaf:      {"set": "BallInf", "center": [0, 0], "radius": 1}
//   operation: {"op": "LinearMap", "args": [...], "matrix": [[...]], "vector": [...]}
//
// Leaf fields per kind: HalfSpace/Hyperplane: normal, offset;
// Hyperrectangle: center, radius; BallInf: center, radius (scalar);
// Interval: lo, hi; Zonotope: center, generators (rows of G);
// HPolyhedron/HPolytope: constraints [{normal, offset}], optional dim;
// VPolygon/VPolytope: vertices, optional dim.
// The root may carry "version": "setcalc/1".

/// Parse document text. Malformed JSON reports the byte offset.
SetExpr parse_document(std::string_view text);

SetExpr expression_from_json(const nlohmann::json& node);

/// A point literal: a bare number array or {"point": [...]}.
Vector point_from_json(const nlohmann::json& node);

nlohmann::json to_json(const SetExpr& expr);
nlohmann::json to_json(const ConcreteSet& set);

/// Serialized root document including the version field.
std::string serialize(const SetExpr& expr, int indent = -1);

}  // namespace setcalc::io
