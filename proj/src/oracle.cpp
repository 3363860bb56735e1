#include "lstn/oracle.hpp"

#include <limits>

namespace lstn {

std::uint64_t count_selections(const Instance& inst) {
    std::uint64_t product = 1;
    for (const auto& region : inst.regions) {
        const std::uint64_t k = region.vertices.size();
        if (k == 0) return 0;
        if (product > std::numeric_limits<std::uint64_t>::max() / k) {
            return std::numeric_limits<std::uint64_t>::max();  // saturate
        }
        product *= k;
    }
    return product;
}

Solution exact_opt(const Instance& inst, std::uint64_t budget) {
    require_valid(inst);
    const std::uint64_t space = count_selections(inst);
    if (space > budget) throw budget_error(space, budget);

    const std::size_t n = inst.n();
    Selection sel;
    sel.points.reserve(n);
    sel.vertex_indices.assign(n, 0);
    for (const auto& region : inst.regions) sel.points.push_back(region.vertices[0]);

    Solution best;
    bool have = false;
    while (true) {
        Tree tree = max_spanning_tree(sel);
        // Selections are visited in lexicographic vertex-index order (the last region
        // advances fastest), so a strict comparison keeps the lexicographically
        // smallest maximizer.
        if (!have || tree.length > best.length) {
            best = Solution{sel, std::move(tree), Producer::Exact, 0.0};
            best.length = best.tree.length;
            have = true;
        }
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            if (++sel.vertex_indices[i] < inst.regions[i].vertices.size()) {
                sel.points[i] = inst.regions[i].vertices[sel.vertex_indices[i]];
                advanced = true;
                break;
            }
            sel.vertex_indices[i] = 0;
            sel.points[i] = inst.regions[i].vertices[0];
        }
        if (!advanced) break;
    }
    return best;
}

}  // namespace lstn
