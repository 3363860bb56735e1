#pragma once

#include <cstdint>

#include "lstn/approx.hpp"
#include "lstn/error.hpp"

namespace lstn {

// Saturating product of the per-region vertex counts.
std::uint64_t count_selections(const Instance& inst);

// Brute-force exact optimum: enumerates every vertex selection in lexicographic
// vertex-index order and keeps the maximum spanning tree; among equal maxima the
// lexicographically smallest selection wins. Throws budget_error when the selection
// space exceeds `budget` (never silently approximates).
Solution exact_opt(const Instance& inst, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace lstn
