#pragma once

#include <string>
#include <vector>

namespace lstn {

// Closed-form constants of the ratio analysis.
struct RatioConstants {
    double rho;         // (4*sqrt(3) + 2 - 27^(1/4)) / 13 = (1 + y0)/2, the A2 ratio
    double z0;          // (8*3^(1/4) - sqrt(3) - 6) / 26
    double y0;          // (8*sqrt(3) - 2*27^(1/4) - 9) / 13
    double case1_min;   // sqrt(2 - sqrt(3)), the y <= 0 ratio floor
    double prelim_508;  // (1 + 2*sqrt(2 - sqrt(3))) / 4
    double prelim_506;  // (4*sqrt(3) - 1 - 2*sqrt(9 - 3*sqrt(3))) / 4
    double x_shortcut;  // (5 + sqrt(29)) / 20, the x >= 0.2 ratio floor
};

RatioConstants ratio_constants();

// g(z, y) = max(1 + y, sqrt(1 + 4z^2)) / min(2, 1 + sqrt(3)/2 + z + 2y/sqrt(3))
// on [0, 0.2]^2. Throws std::domain_error outside the square.
double g_ratio(double z, double y);

// f(z) = 2*sqrt(1 + 4z^2) / (2 + sqrt(3) + 2z) on [0, 0.2]; non-increasing up to
// 1 - sqrt(3)/2 where it attains sqrt(2 - sqrt(3)).
double f_ratio(double z);

// Single-branch forms of g used by the derivative-sign certificates.
double g_region_ii(double z, double y);   // (1 + y) / (1 + sqrt(3)/2 + z + 2y/sqrt(3))
double g_region_iii(double z, double y);  // sqrt(1 + 4z^2) / (1 + sqrt(3)/2 + z + 2y/sqrt(3))

struct CaseAnalysisResult {
    RatioConstants constants{};
    double g_min = 0.0;
    double g_argmin_z = 0.0;
    double g_argmin_y = 0.0;
    double f_min = 0.0;
    double f_argmin = 0.0;
};

// Grid-minimizes g over [0, 0.2]^2 and f over [0, 0.2]. Requires grid_step <= 1e-3.
CaseAnalysisResult minimize_case_analysis(double grid_step);

struct TheoryCheck {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Full table of numeric certificates: closed-form identities, high-precision constant
// cross-checks, grid minima, and finite-difference sign certificates. A nonzero
// `perturb` shifts the rho used by the identity checks and must make at least one
// check fail (self-test hook).
std::vector<TheoryCheck> verify_theory(double grid_step, double perturb = 0.0);

}  // namespace lstn
