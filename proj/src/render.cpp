#include "lstn/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace lstn {

namespace {

// Region dot colors; representatives are always green, edges blue.
constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
constexpr const char* kEdgeColor = "#2b6cd4";
constexpr const char* kRepColor = "#2ca02c";

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
    if (inst.dim != 2) throw std::invalid_argument("render supports d=2 only");
    require_valid(inst);

    // SVG y grows downward; flip the y coordinate so the picture matches the plane.
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    bool first = true;
    for (const auto& region : inst.regions) {
        for (const auto& v : region.vertices) {
            const double x = v[0];
            const double y = -v[1];
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            } else {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    const double span = std::max({span_x, span_y, 1e-9});
    const double margin = 0.05 * span;
    const double view_x = min_x - margin;
    const double view_y = min_y - margin;
    const double view_w = span_x + 2.0 * margin;
    const double view_h = span_y + 2.0 * margin;

    const double dot_r = 0.012 * span;
    const double rep_r = 0.020 * span;
    const double stroke_w = 0.006 * span;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(view_x) + " " +
           num(view_y) + " " + num(view_w) + " " + num(view_h) + "\">\n";

    if (sol != nullptr) {
        svg += "  <g stroke=\"" + std::string(kEdgeColor) + "\" stroke-width=\"" + num(stroke_w) +
               "\" stroke-linecap=\"round\">\n";
        for (const auto& [u, v] : sol->tree.edges) {
            const Point& pu = sol->selection.points[u];
            const Point& pv = sol->selection.points[v];
            svg += "    <line x1=\"" + num(pu[0]) + "\" y1=\"" + num(-pu[1]) + "\" x2=\"" +
                   num(pv[0]) + "\" y2=\"" + num(-pv[1]) + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    for (std::size_t r = 0; r < inst.n(); ++r) {
        const auto& region = inst.regions[r];
        svg += "  <g fill=\"" + std::string(kPalette[r % kPaletteSize]) + "\">\n";
        for (const auto& v : region.vertices) {
            svg += "    <circle cx=\"" + num(v[0]) + "\" cy=\"" + num(-v[1]) + "\" r=\"" +
                   num(dot_r) + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    if (sol != nullptr) {
        svg += "  <g fill=\"" + std::string(kRepColor) + "\">\n";
        for (const auto& p : sol->selection.points) {
            svg += "    <circle cx=\"" + num(p[0]) + "\" cy=\"" + num(-p[1]) + "\" r=\"" +
                   num(rep_r) + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace lstn
