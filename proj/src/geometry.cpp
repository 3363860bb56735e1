#include "lstn/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lstn/instance.hpp"

namespace lstn {

double dist(const Point& p, const Point& q) {
    if (p.empty() || p.size() != q.size()) {
        throw std::invalid_argument("dist: dimension mismatch (" + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()) + ")");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

DiameterPair bichromatic_diameter(const Instance& inst) {
    const std::size_t n = inst.n();
    if (n < 2) throw std::invalid_argument("bichromatic_diameter: need n >= 2 regions");
    DiameterPair best;
    bool found = false;
    // Scan order (ra, va, rb, vb) is lexicographic, so keeping the first strict
    // maximum realizes the tie rule.
    for (std::size_t ra = 0; ra < n; ++ra) {
        const auto& va_list = inst.regions[ra].vertices;
        for (std::size_t va = 0; va < va_list.size(); ++va) {
            for (std::size_t rb = ra + 1; rb < n; ++rb) {
                const auto& vb_list = inst.regions[rb].vertices;
                for (std::size_t vb = 0; vb < vb_list.size(); ++vb) {
                    const double d = dist(va_list[va], vb_list[vb]);
                    if (!found || d > best.length) {
                        best = {ra, va, rb, vb, d};
                        found = true;
                    }
                }
            }
        }
    }
    if (!found) throw std::invalid_argument("bichromatic_diameter: regions have no vertices");
    return best;
}

DiameterPair monochromatic_diameter(const Instance& inst) {
    if (inst.n() == 0) throw std::invalid_argument("monochromatic_diameter: empty instance");
    DiameterPair best;
    bool found = false;
    for (std::size_t r = 0; r < inst.n(); ++r) {
        const auto& verts = inst.regions[r].vertices;
        if (verts.empty()) throw std::invalid_argument("monochromatic_diameter: empty region");
        if (verts.size() == 1) {
            // A single-vertex region contributes the degenerate pair (v, v) of length 0.
            if (!found) {
                best = {r, 0, r, 0, 0.0};
                found = true;
            }
            continue;
        }
        for (std::size_t va = 0; va + 1 < verts.size(); ++va) {
            for (std::size_t vb = va + 1; vb < verts.size(); ++vb) {
                const double d = dist(verts[va], verts[vb]);
                if (!found || d > best.length) {
                    best = {r, va, r, vb, d};
                    found = true;
                }
            }
        }
    }
    return best;
}

std::pair<std::size_t, double> farthest_vertex_from(const Point& p, const Neighborhood& region) {
    if (region.vertices.empty()) {
        throw std::invalid_argument("farthest_vertex_from: region '" + region.label +
                                    "' has no vertices");
    }
    std::size_t best = 0;
    double best_d = dist(p, region.vertices[0]);
    for (std::size_t v = 1; v < region.vertices.size(); ++v) {
        const double d = dist(p, region.vertices[v]);
        if (d > best_d) {
            best = v;
            best_d = d;
        }
    }
    return {best, best_d};
}

}  // namespace lstn
