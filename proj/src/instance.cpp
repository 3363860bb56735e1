#include "lstn/instance.hpp"

#include <cmath>
#include <string>

#include "lstn/error.hpp"

namespace lstn {

std::size_t Instance::total_vertices() const {
    std::size_t total = 0;
    for (const auto& region : regions) total += region.vertices.size();
    return total;
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> violations;
    if (inst.dim < 2) {
        violations.push_back("dim < 2 (instance dimension is " + std::to_string(inst.dim) + ")");
    }
    if (inst.n() < 2) {
        violations.push_back("n < 2 (instance has " + std::to_string(inst.n()) + " region" +
                             (inst.n() == 1 ? "" : "s") + ")");
    }
    for (std::size_t r = 0; r < inst.n(); ++r) {
        const auto& region = inst.regions[r];
        const std::string where = "region " + std::to_string(r) +
                                  (region.label.empty() ? "" : " ('" + region.label + "')");
        if (region.vertices.empty()) {
            violations.push_back(where + " has no vertices");
            continue;
        }
        for (std::size_t v = 0; v < region.vertices.size(); ++v) {
            const Point& pt = region.vertices[v];
            if (pt.size() != inst.dim) {
                violations.push_back(where + " vertex " + std::to_string(v) + ": dimension " +
                                     std::to_string(pt.size()) + " does not match instance dim " +
                                     std::to_string(inst.dim));
                continue;
            }
            for (double coord : pt) {
                if (!std::isfinite(coord)) {
                    violations.push_back("non-finite coordinate at region " + std::to_string(r) +
                                         " vertex " + std::to_string(v));
                    break;
                }
            }
        }
    }
    return violations;
}

void require_valid(const Instance& inst) {
    const auto violations = validate(inst);
    if (violations.empty()) return;
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw validation_error(msg);
}

NormalizedView normalize(const Instance& inst) {
    require_valid(inst);
    NormalizedView view;
    view.diam_pair = bichromatic_diameter(inst);
    view.scale = view.diam_pair.length;
    const Point& pa = inst.regions[view.diam_pair.region_a].vertices[view.diam_pair.vertex_a];
    const Point& pb = inst.regions[view.diam_pair.region_b].vertices[view.diam_pair.vertex_b];
    view.center.resize(inst.dim);
    for (std::size_t i = 0; i < inst.dim; ++i) view.center[i] = 0.5 * (pa[i] + pb[i]);
    return view;
}

}  // namespace lstn
