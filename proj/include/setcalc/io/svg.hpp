#pragma once

#include "setcalc/sets.hpp"

#include <string>
#include <vector>

namespace setcalc::io {

/// Counter-clockwise outline of a bounded 2-D set for drawing.
std::vector<Vector> outline(const ConcreteSet& set, const ToleranceContext& ctx = default_tolerance());

/// SVG 1.1 document with one <polygon> per outline, colours taken in order
/// from a fixed palette, and a viewBox fitted to the union bounding box
/// plus a 5% margin. Output is byte-stable for identical input.
std::string render_svg(const std::vector<std::vector<Vector>>& polygons);

}  // namespace setcalc::io
