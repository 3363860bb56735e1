#include "lstn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lstn {

double radius_R(double y) {
    if (!(y >= -1.0 && y <= 1.0)) throw std::domain_error("radius_R: y outside [-1, 1]");
    const double base = std::sqrt(3.0) / 2.0;
    return y <= 0.0 ? base : base + 2.0 * y / std::sqrt(3.0);
}

namespace {

// y = monochromatic diameter / D - 1, clamped into the domain of radius_R.
// The clamp only absorbs float rounding: y <= 1 holds for every valid instance.
double normalized_y(const Instance& inst, double scale) {
    if (scale == 0.0) return -1.0;
    const double y = monochromatic_diameter(inst).length / scale - 1.0;
    return std::min(std::max(y, -1.0), 1.0);
}

}  // namespace

double ub_trivial(const Instance& inst) {
    return static_cast<double>(inst.n() - 1) * bichromatic_diameter(inst).length;
}

double ub_dmax(const Instance& inst) {
    const std::size_t n = inst.n();
    if (n < 2) throw std::invalid_argument("ub_dmax: need n >= 2 regions");
    // Dmax per region: the farthest any of its vertices reaches into other regions.
    std::vector<double> reach(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        double dmax = 0.0;
        for (const Point& v : inst.regions[r].vertices) {
            for (std::size_t s = 0; s < n; ++s) {
                if (s == r) continue;
                for (const Point& w : inst.regions[s].vertices) dmax = std::max(dmax, dist(v, w));
            }
        }
        reach[r] = dmax;
    }
    double best = 0.0;
    bool have = false;
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) sum += reach[i];
        }
        if (!have || sum < best) {
            best = sum;
            have = true;
        }
    }
    return best;
}

double ub_omega(const Instance& inst, const NormalizedView& view, const OmegaInfo& om) {
    if (inst.n() < 4) throw std::invalid_argument("ub_omega: requires n >= 4");
    const double r = radius_R(normalized_y(inst, view.scale));
    const double factor = std::min(1.0, (1.0 + om.radius + r) / 2.0);
    return static_cast<double>(inst.n() - 1) * factor * view.scale;
}

double ub_refined(const Instance& inst, const NormalizedView& view, const OmegaInfo& om) {
    if (inst.n() < 4) throw std::invalid_argument("ub_refined: requires n >= 4");
    const double r = radius_R(normalized_y(inst, view.scale));
    double z_hat = 0.0;
    for (std::size_t idx : om.inside) z_hat += om.containment_radii[idx];
    z_hat /= static_cast<double>(om.inside.size());
    const double refined =
        0.5 * static_cast<double>(inst.n() - 1) * (1.0 + z_hat + r) * view.scale;
    const double trivial = static_cast<double>(inst.n() - 1) * view.scale;
    return std::min(trivial, refined);
}

bool omega_containment_check(const Instance& inst, const NormalizedView& view) {
    const double r = radius_R(normalized_y(inst, view.scale));
    const double limit = r * view.scale * (1.0 + 1e-9);
    for (const auto& region : inst.regions) {
        for (const auto& v : region.vertices) {
            if (dist(v, view.center) > limit) return false;
        }
    }
    return true;
}

BoundsReport compute_bounds(const Instance& inst) {
    const NormalizedView view = normalize(inst);
    BoundsReport report;
    report.D = view.scale;
    if (view.degenerate()) {
        report.degenerate = true;
        return report;  // all bounds zero; the certified ratio is defined as 1
    }
    report.y = monochromatic_diameter(inst).length / view.scale - 1.0;
    report.R_y = radius_R(std::min(std::max(report.y, -1.0), 1.0));
    report.ub_trivial = static_cast<double>(inst.n() - 1) * view.scale;
    report.ub_dmax = lstn::ub_dmax(inst);
    double best = std::min(report.ub_trivial, report.ub_dmax);
    if (inst.n() >= 4) {
        const OmegaInfo om = omega(inst, view);
        report.x = om.radius;
        double z_hat = 0.0;
        for (std::size_t idx : om.inside) z_hat += om.containment_radii[idx];
        z_hat /= static_cast<double>(om.inside.size());
        report.z_hat = z_hat;
        report.ub_omega = lstn::ub_omega(inst, view, om);
        report.ub_refined = lstn::ub_refined(inst, view, om);
        best = std::min(best, std::min(*report.ub_omega, *report.ub_refined));
    }
    report.ub_best = best;
    return report;
}

double certified_ratio(const Solution& sol, const BoundsReport& report) {
    if (report.degenerate) return 1.0;
    return sol.length / report.ub_best;
}

}  // namespace lstn
