#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lstn/geometry.hpp"

namespace lstn {

// One neighborhood, reduced to its vertex set. Duplicate vertices are tolerated.
struct Neighborhood {
    std::size_t id = 0;
    std::string label;
    std::vector<Point> vertices;
};

struct Instance {
    std::size_t dim = 2;
    std::vector<Neighborhood> regions;

    std::size_t n() const { return regions.size(); }
    std::size_t total_vertices() const;  // N
};

// Returns a list of human-readable invariant violations; empty iff the instance is valid.
std::vector<std::string> validate(const Instance& inst);

// Throws validation_error listing every violation.
void require_valid(const Instance& inst);

// Derived normalization data: the bichromatic diameter D (`scale`, original units) and
// the midpoint o of the tie-broken diameter pair (`center`). Coordinates are never
// transformed; normalized formulas divide lengths by `scale`. scale == 0 marks a
// degenerate instance (all vertices coincide; every spanning tree has length zero).
struct NormalizedView {
    double scale = 0.0;
    Point center;
    DiameterPair diam_pair;

    bool degenerate() const { return scale == 0.0; }
};

NormalizedView normalize(const Instance& inst);

}  // namespace lstn
