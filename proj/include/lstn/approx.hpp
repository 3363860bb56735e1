#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lstn/instance.hpp"
#include "lstn/spanning.hpp"

namespace lstn {

enum class Producer { A1StarA, A1StarB, A2T1, A2T2, Exact };

// Stable tags: "A1_STAR_A", "A1_STAR_B", "A2_T1", "A2_T2", "EXACT".
const char* producer_tag(Producer p);

struct Solution {
    Selection selection;
    Tree tree;
    Producer producer = Producer::Exact;
    double length = 0.0;  // == tree.length, original units
};

// The disk (ball) omega around o: radius x is the smallest normalized radius such that
// at least floor(n/2) of the non-diameter regions fit inside; `inside` lists those
// regions. containment_radii[r] is the max vertex distance of region r to o, in units
// of D, recorded for every region.
struct OmegaInfo {
    Point center;
    double radius = 0.0;
    std::vector<std::size_t> inside;  // ascending region indices, |inside| == floor(n/2)
    std::vector<double> containment_radii;
};

// Both stars centered at the bichromatic diameter endpoints, sharing the
// farthest-improving selection (per other region: the vertex maximizing
// max(dist to a, dist to b), ties to the smallest vertex index).
// first = star at a (A1_STAR_A), second = star at b (A1_STAR_B).
std::pair<Solution, Solution> a1_stars(const Instance& inst, const NormalizedView& view);

// Algorithm A1: the longer of the two diameter stars (ties prefer the star at a).
// Guarantee: length >= (n/2) * D on non-degenerate instances.
Solution algo_a1(const Instance& inst);

// Requires n >= 4 and a non-degenerate view.
OmegaInfo omega(const Instance& inst, const NormalizedView& view);

// Candidate T1: the longer of the two stars centered at the monochromatic diameter
// endpoints (ties prefer the first endpoint). Guarantee: length >= (n-1)(1+y)/2 * D.
Solution candidate_t1(const Instance& inst);

// Candidate T2: edge ab plus, per remaining region, the edge from its farthest-from-o
// vertex to a or b, whichever is longer (ties to a).
// Guarantee: length/D >= (n-1)/4 * (1 + sqrt(1+4x^2)).
Solution candidate_t2(const Instance& inst, const NormalizedView& view, const OmegaInfo& om);

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

// Algorithm A2. n in {2,3}: exact optimum by enumeration. n >= 4: the longest of
// {T2, T1 (only when y >= 0), the two A1 stars}; equal lengths resolve in that
// precedence order. Guarantee: length >= rho * len(OPT) with rho = 0.5114...
Solution algo_a2(const Instance& inst, std::uint64_t oracle_budget = kDefaultOracleBudget);

}  // namespace lstn
