#include "setcalc/io/svg.hpp"

#include "setcalc/errors.hpp"

#include <array>
#include <limits>
#include <sstream>

namespace setcalc::io {

namespace {

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::vector<Vector> outline(const ConcreteSet& set, const ToleranceContext& ctx) {
    if (dim(set) != 2) {
        throw InvalidArgument("only 2-D sets can be plotted, got a " + std::string(kind_name(set)) +
                              " of dimension " + std::to_string(dim(set)));
    }
    if (const auto* p = std::get_if<VPolygon>(&set)) {
        return p->vertices();
    }
    if (!is_bounded(set, ctx)) {
        throw UnboundedError("cannot plot an unbounded " + std::string(kind_name(set)));
    }
    return VPolygon(vertices_list(set, ctx), ctx).vertices();
}

std::string render_svg(const std::vector<std::vector<Vector>>& polygons) {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = xmin;
    double xmax = -xmin;
    double ymax = -xmin;
    for (const auto& poly : polygons) {
        for (const auto& p : poly) {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    if (xmin > xmax) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double width = xmax - xmin;
    const double height = ymax - ymin;
    const double span = std::max({width, height, 1e-9});
    const double mx = 0.05 * (width > 0.0 ? width : span);
    const double my = 0.05 * (height > 0.0 ? height : span);

    // SVG's y axis points down; plot (x, -y).
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << format_number(xmin - mx) << ' '
        << format_number(-ymax - my) << ' ' << format_number(width + 2 * mx) << ' ' << format_number(height + 2 * my)
        << "\" width=\"600\" height=\"600\" preserveAspectRatio=\"xMidYMid meet\">\n";
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const char* colour = kPalette[i % kPalette.size()];
        out << "  <polygon points=\"";
        for (std::size_t k = 0; k < polygons[i].size(); ++k) {
            const Vector& p = polygons[i][k];
            out << (k == 0 ? "" : " ") << format_number(p[0]) << ',' << format_number(p[1] == 0.0 ? 0.0 : -p[1]);
        }
        out << "\" fill=\"" << colour << "\" fill-opacity=\"0.35\" stroke=\"" << colour
            << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace setcalc::io
