#include "lstn/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace lstn {

Instance gen_example_star() {
    const double h = std::sqrt(3.0) / 2.0;
    const Point a{0.0, 0.0};
    const Point b{1.0, 0.0};
    const Point c{0.5, h};
    Instance inst;
    inst.dim = 2;
    inst.regions = {
        {0, "X1", {a, b}},
        {1, "X2", {b, c}},
        {2, "X3", {a, c}},
        {3, "X4", {a, b, c}},
    };
    return inst;
}

Instance gen_example_greedy() {
    const double h = std::sqrt(3.0) / 2.0;
    const Point a{0.0, 0.0};
    const Point b{1.0, 0.0};
    const Point c{0.5, h};
    const Point d{0.75, h / 2.0};  // midpoint of bc
    Instance inst;
    inst.dim = 2;
    inst.regions = {
        {0, "X1", {a, b}},
        {1, "X2", {a, c}},
        {2, "X3", {d}},
    };
    return inst;
}

Instance gen_tight(std::size_t n, double eps) {
    if (n < 3) throw std::invalid_argument("gen_tight: n must be >= 3");
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("gen_tight: eps must lie in (0, 1/2)");
    const double side = 1.0 - eps;
    const double apex = std::sqrt(side * side - 0.25);
    const Point a{0.0, 0.0};
    const Point b{1.0, 0.0};
    const Point c{0.5, apex};

    Instance inst;
    inst.dim = 2;
    inst.regions.reserve(n);
    inst.regions.push_back({0, "X1", {a, c}});
    inst.regions.push_back({1, "X2", {b, c}});
    const double level = apex - side;  // below ab, at distance `side` from c
    const double jitter = 1e-6;
    const std::size_t count = n - 2;
    for (std::size_t k = 0; k < count; ++k) {
        double delta = 0.0;
        if (count > 1) {
            delta = -jitter +
                    2.0 * jitter * static_cast<double>(k) / static_cast<double>(count - 1);
        }
        inst.regions.push_back(
            {k + 2, "X" + std::to_string(k + 3), {Point{0.5 + delta, level}}});
    }
    return inst;
}

Instance gen_random(std::size_t n, std::size_t k_max, std::size_t dim, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random: n must be >= 2");
    if (k_max < 1) throw std::invalid_argument("gen_random: k_max must be >= 1");
    if (dim < 2) throw std::invalid_argument("gen_random: dim must be >= 2");
    std::mt19937_64 rng(seed);
    // Map raw engine output ourselves: std::uniform_real_distribution is not
    // reproducible across standard library implementations.
    auto next_u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    Instance inst;
    inst.dim = dim;
    inst.regions.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t k = 1 + static_cast<std::size_t>(rng() % k_max);
        Neighborhood region{r, "X" + std::to_string(r + 1), {}};
        region.vertices.reserve(k);
        for (std::size_t v = 0; v < k; ++v) {
            Point pt(dim);
            for (double& coord : pt) coord = next_u01();
            region.vertices.push_back(std::move(pt));
        }
        inst.regions.push_back(std::move(region));
    }
    return inst;
}

}  // namespace lstn
