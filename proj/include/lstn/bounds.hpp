#pragma once

#include <optional>

#include "lstn/approx.hpp"
#include "lstn/instance.hpp"

namespace lstn {

// Radius of the disk that provably contains every vertex, in units of D:
// sqrt(3)/2 for y <= 0 and sqrt(3)/2 + 2y/sqrt(3) for y >= 0.
// Throws std::domain_error for y outside [-1, 1].
double radius_R(double y);

// (n-1) * D: every tree edge is bichromatic, hence no longer than D.
double ub_trivial(const Instance& inst);

// min over root j of sum_{i != j} Dmax(X_i), where Dmax(X) is the largest distance
// from a vertex of X to a vertex of any other region.
double ub_dmax(const Instance& inst);

// (n-1) * min(1, (1 + x + R(y))/2) * D. Requires n >= 4.
double ub_omega(const Instance& inst, const NormalizedView& view, const OmegaInfo& om);

// min(ub_trivial, (n-1)/2 * (1 + z_hat + R(y)) * D) with z_hat the mean containment
// radius over the omega regions. Requires n >= 4.
double ub_refined(const Instance& inst, const NormalizedView& view, const OmegaInfo& om);

// True iff every vertex lies within R(y) * D of o (1e-9 relative tolerance).
// Holds for every valid instance; a false return indicates a bug, not a bad instance.
bool omega_containment_check(const Instance& inst, const NormalizedView& view);

struct BoundsReport {
    bool degenerate = false;  // D == 0; all bounds zero, certified ratio defined as 1
    double D = 0.0;
    double y = -1.0;          // monochromatic diameter / D - 1
    double R_y = 0.0;
    std::optional<double> x;      // omega radius, normalized; defined for n >= 4
    std::optional<double> z_hat;  // mean containment radius over omega regions
    double ub_trivial = 0.0;
    double ub_dmax = 0.0;
    std::optional<double> ub_omega;
    std::optional<double> ub_refined;
    double ub_best = 0.0;  // min of the defined bounds, original units
};

BoundsReport compute_bounds(const Instance& inst);

// sol.length / ub_best; 1 for degenerate instances.
double certified_ratio(const Solution& sol, const BoundsReport& report);

}  // namespace lstn
