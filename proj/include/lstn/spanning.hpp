#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lstn/geometry.hpp"

namespace lstn {

// One representative vertex per region, index-aligned with Instance::regions.
struct Selection {
    std::vector<Point> points;
    std::vector<std::size_t> vertex_indices;

    std::size_t size() const { return points.size(); }
};

// Unordered region-index pair, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

// Spanning tree on the n representatives; edges sorted, length in original units.
struct Tree {
    std::vector<Edge> edges;
    double length = 0.0;
};

// Canonical edge-length sum (edges assumed sorted; this is the order every tree uses).
double tree_length(const Selection& sel, const std::vector<Edge>& edges);

// Maximum-weight spanning tree of the complete graph on the representatives.
// Prim with negated comparisons, O(n^2); equal-weight candidate edges resolve to the
// lexicographically smallest normalized index pair.
Tree max_spanning_tree(const Selection& sel);

// Star: all edges from `center` to the other regions.
Tree star(const Selection& sel, std::size_t center);

// 2-star: edge pq plus one edge per remaining region r to anchor_of[r] (p or q).
Tree two_star(const Selection& sel, std::size_t p, std::size_t q,
              const std::vector<std::size_t>& anchor_of);

// Union-find check: exactly n-1 edges forming a connected acyclic graph on [0, n)
// with distinct endpoints.
bool is_spanning_tree(std::size_t n, const std::vector<Edge>& edges);

}  // namespace lstn
