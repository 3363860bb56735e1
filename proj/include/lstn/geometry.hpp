#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lstn {

// A point in R^d. The dimension is data-driven per instance.
using Point = std::vector<double>;

struct Instance;
struct Neighborhood;

// Vertex pair attaining a diameter. Bichromatic pairs have region_a != region_b;
// monochromatic pairs have region_a == region_b and vertex_a != vertex_b, except for
// single-vertex regions where vertex_a == vertex_b and length == 0.
struct DiameterPair {
    std::size_t region_a = 0;
    std::size_t vertex_a = 0;
    std::size_t region_b = 0;
    std::size_t vertex_b = 0;
    double length = 0.0;
};

// Euclidean distance; throws std::invalid_argument on a dimension mismatch.
double dist(const Point& p, const Point& q);

// Farthest vertex pair drawn from two distinct regions, by exhaustive O(N^2) scan.
// Ties resolve to the lexicographically smallest (region_a, vertex_a, region_b, vertex_b)
// with region_a < region_b.
DiameterPair bichromatic_diameter(const Instance& inst);

// Farthest vertex pair within a single region, same tie rule. All-singleton instances
// yield length 0.
DiameterPair monochromatic_diameter(const Instance& inst);

// Vertex of `region` farthest from p; ties go to the smallest vertex index.
// Returns (vertex index, distance).
std::pair<std::size_t, double> farthest_vertex_from(const Point& p, const Neighborhood& region);

}  // namespace lstn
