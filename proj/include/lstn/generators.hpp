#pragma once

#include <cstddef>
#include <cstdint>

#include "lstn/instance.hpp"

namespace lstn {

// Four regions on a unit equilateral triangle abc:
// X1 = {a,b}, X2 = {b,c}, X3 = {a,c}, X4 = {a,b,c}. Optimum 3 (star at a).
Instance gen_example_star();

// Greedy-trap example: X1 = {a,b}, X2 = {a,c}, X3 = {d} with d the midpoint of bc.
Instance gen_example_greedy();

// Tight family: isosceles triangle |ca| = |cb| = 1-eps, |ab| = 1; X1 = segment ac,
// X2 = segment bc, and n-2 singletons at distance 1-eps from c, just below ab near
// the midpoint (distinct horizontal jitters |delta| <= 1e-6).
// Requires n >= 3 and eps in (0, 1/2).
Instance gen_tight(std::size_t n, double eps);

// Deterministic random family: vertices uniform in the unit cube, region sizes
// uniform in [1, k_max]. Requires n >= 2, k_max >= 1, dim >= 2.
Instance gen_random(std::size_t n, std::size_t k_max, std::size_t dim, std::uint64_t seed);

}  // namespace lstn
