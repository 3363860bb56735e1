#include "lstn/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lstn {

namespace {

constexpr double kDomainMax = 0.2;

void check_domain_1d(double z) {
    if (!(z >= 0.0 && z <= kDomainMax)) {
        throw std::domain_error("f_ratio: z outside [0, 0.2]");
    }
}

void check_domain_2d(double z, double y) {
    if (!(z >= 0.0 && z <= kDomainMax) || !(y >= 0.0 && y <= kDomainMax)) {
        throw std::domain_error("g_ratio: (z, y) outside [0, 0.2]^2");
    }
}

}  // namespace

RatioConstants ratio_constants() {
    const double s3 = std::sqrt(3.0);
    const double q3 = std::sqrt(std::sqrt(3.0));    // 3^(1/4)
    const double q27 = std::sqrt(std::sqrt(27.0));  // 27^(1/4)
    RatioConstants c{};
    c.rho = (4.0 * s3 + 2.0 - q27) / 13.0;
    c.z0 = (8.0 * q3 - s3 - 6.0) / 26.0;
    c.y0 = (8.0 * s3 - 2.0 * q27 - 9.0) / 13.0;
    c.case1_min = std::sqrt(2.0 - s3);
    c.prelim_508 = (1.0 + 2.0 * std::sqrt(2.0 - s3)) / 4.0;
    c.prelim_506 = (4.0 * s3 - 1.0 - 2.0 * std::sqrt(9.0 - 3.0 * s3)) / 4.0;
    c.x_shortcut = (5.0 + std::sqrt(29.0)) / 20.0;
    return c;
}

double g_ratio(double z, double y) {
    check_domain_2d(z, y);
    const double s3 = std::sqrt(3.0);
    const double num = std::max(1.0 + y, std::sqrt(1.0 + 4.0 * z * z));
    const double den = std::min(2.0, 1.0 + s3 / 2.0 + z + 2.0 * y / s3);
    return num / den;
}

double f_ratio(double z) {
    check_domain_1d(z);
    return 2.0 * std::sqrt(1.0 + 4.0 * z * z) / (2.0 + std::sqrt(3.0) + 2.0 * z);
}

double g_region_ii(double z, double y) {
    const double s3 = std::sqrt(3.0);
    return (1.0 + y) / (1.0 + s3 / 2.0 + z + 2.0 * y / s3);
}

double g_region_iii(double z, double y) {
    const double s3 = std::sqrt(3.0);
    return std::sqrt(1.0 + 4.0 * z * z) / (1.0 + s3 / 2.0 + z + 2.0 * y / s3);
}

CaseAnalysisResult minimize_case_analysis(double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 1e-3 + 1e-15)) {
        throw std::invalid_argument("minimize_case_analysis: grid_step must lie in (0, 1e-3]");
    }
    CaseAnalysisResult out;
    out.constants = ratio_constants();
    const auto steps = static_cast<std::size_t>(std::ceil(kDomainMax / grid_step - 1e-9));

    out.g_min = std::numeric_limits<double>::infinity();
    for (std::size_t iz = 0; iz <= steps; ++iz) {
        const double z = std::min(static_cast<double>(iz) * grid_step, kDomainMax);
        for (std::size_t iy = 0; iy <= steps; ++iy) {
            const double y = std::min(static_cast<double>(iy) * grid_step, kDomainMax);
            const double v = g_ratio(z, y);
            if (v < out.g_min) {
                out.g_min = v;
                out.g_argmin_z = z;
                out.g_argmin_y = y;
            }
        }
    }

    out.f_min = std::numeric_limits<double>::infinity();
    for (std::size_t iz = 0; iz <= steps; ++iz) {
        const double z = std::min(static_cast<double>(iz) * grid_step, kDomainMax);
        const double v = f_ratio(z);
        if (v < out.f_min) {
            out.f_min = v;
            out.f_argmin = z;
        }
    }
    return out;
}

std::vector<TheoryCheck> verify_theory(double grid_step, double perturb) {
    const double s3 = std::sqrt(3.0);
    const RatioConstants c = ratio_constants();
    const double rho_used = c.rho + perturb;
    const CaseAnalysisResult grid = minimize_case_analysis(grid_step);

    // Independent high-precision evaluation of the closed forms.
    const long double ls3 = std::sqrt(3.0L);
    const long double lq27 = std::sqrt(std::sqrt(27.0L));
    const long double lq3 = std::sqrt(std::sqrt(3.0L));
    const auto hp_rho = static_cast<double>((4.0L * ls3 + 2.0L - lq27) / 13.0L);
    const auto hp_z0 = static_cast<double>((8.0L * lq3 - ls3 - 6.0L) / 26.0L);
    const auto hp_y0 = static_cast<double>((8.0L * ls3 - 2.0L * lq27 - 9.0L) / 13.0L);
    const auto hp_case1 = static_cast<double>(std::sqrt(2.0L - ls3));
    const auto hp_prelim_508 = static_cast<double>((1.0L + 2.0L * std::sqrt(2.0L - ls3)) / 4.0L);
    const auto hp_prelim_506 =
        static_cast<double>((4.0L * ls3 - 1.0L - 2.0L * std::sqrt(9.0L - 3.0L * ls3)) / 4.0L);
    const auto hp_x_shortcut = static_cast<double>((5.0L + std::sqrt(29.0L)) / 20.0L);

    std::vector<TheoryCheck> checks;
    auto add = [&checks](const std::string& name, double value, double expected, double tol) {
        checks.push_back({name, value, expected, tol, std::abs(value - expected) <= tol});
    };
    auto add_sign = [&checks](const std::string& name, double value, bool want_positive) {
        TheoryCheck chk{name, value, want_positive ? 1.0 : -1.0, 0.0,
                        want_positive ? value > 0.0 : value < 0.0};
        checks.push_back(chk);
    };

    add("rho_equals_half_1_plus_y0", rho_used, (1.0 + c.y0) / 2.0, 1e-15);
    add("curve_arms_agree_at_min_point", 1.0 + c.y0, std::sqrt(1.0 + 4.0 * c.z0 * c.z0), 1e-12);
    add("line_arms_agree_at_min_point", 2.0, 1.0 + s3 / 2.0 + c.z0 + 2.0 * c.y0 / s3, 1e-12);
    add("g_at_min_point_equals_rho", g_ratio(c.z0, c.y0), rho_used, 1e-12);
    add("f_at_stationary_point", f_ratio(1.0 - s3 / 2.0), c.case1_min, 1e-12);

    add("grid_min_g_near_rho", grid.g_min, rho_used, 1e-4);
    add("grid_argmin_g_z", grid.g_argmin_z, c.z0, 1e-3);
    add("grid_argmin_g_y", grid.g_argmin_y, c.y0, 1e-3);
    add("grid_min_f", grid.f_min, c.case1_min, 1e-6);
    add("grid_argmin_f", grid.f_argmin, 1.0 - s3 / 2.0, 1e-3);

    add("const_rho_high_precision", rho_used, hp_rho, 1e-12);
    add("const_z0_high_precision", c.z0, hp_z0, 1e-12);
    add("const_y0_high_precision", c.y0, hp_y0, 1e-12);
    add("const_case1_min_high_precision", c.case1_min, hp_case1, 1e-7);
    add("const_prelim_508_high_precision", c.prelim_508, hp_prelim_508, 1e-7);
    add("const_prelim_506_high_precision", c.prelim_506, hp_prelim_506, 1e-7);
    add("const_x_shortcut_high_precision", c.x_shortcut, hp_x_shortcut, 1e-7);
    add("const_x_shortcut_decimal", c.x_shortcut, 0.5192582, 1e-7);

    // Finite-difference sign certificates for the single-branch forms, central
    // differences with step 1e-6 over a coarse sample grid.
    const double fd = 1e-6;
    double min_ii = std::numeric_limits<double>::infinity();
    double max_iii = -std::numeric_limits<double>::infinity();
    for (double z = 0.0; z <= 0.2 + 1e-12; z += 0.05) {
        for (double y = 0.05; y <= 0.15 + 1e-12; y += 0.05) {
            const double dii = (g_region_ii(z, y + fd) - g_region_ii(z, y - fd)) / (2.0 * fd);
            const double diii = (g_region_iii(z, y + fd) - g_region_iii(z, y - fd)) / (2.0 * fd);
            min_ii = std::min(min_ii, dii);
            max_iii = std::max(max_iii, diii);
        }
    }
    add_sign("upper_branch_dg_dy_positive", min_ii, true);
    add_sign("lower_branch_dg_dy_negative", max_iii, false);
    add_sign("f_non_increasing_on_left_segment", f_ratio(0.05) - f_ratio(0.10), true);

    return checks;
}

}  // namespace lstn
