#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lstn/bounds.hpp"
#include "lstn/generators.hpp"
#include "lstn/oracle.hpp"
#include "lstn/theory.hpp"
#include "test_util.hpp"

using namespace lstn;

TEST_CASE("radius_R: piecewise values and domain") {
    const double base = std::sqrt(3.0) / 2.0;
    CHECK(radius_R(0.0) == doctest::Approx(base).epsilon(1e-15));
    CHECK(radius_R(-0.5) == base);
    CHECK(radius_R(-1.0) == base);
    CHECK(radius_R(0.2) == doctest::Approx(base + 0.4 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(radius_R(0.2) == doctest::Approx(1.0969655).epsilon(1e-6));
    CHECK(radius_R(1.0) == doctest::Approx(base + 2.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(radius_R(1.5), std::domain_error);
    CHECK_THROWS_AS(radius_R(-1.0000001), std::domain_error);
    // continuity at 0
    CHECK(radius_R(1e-14) == doctest::Approx(radius_R(-1e-14)).epsilon(1e-12));
}

TEST_CASE("ub_trivial: (n-1) D") {
    CHECK(ub_trivial(gen_example_star()) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ub_trivial(lstn_test::singletons({{0.0, 0.0}, {0.0, 2.5}})) == 2.5);
    CHECK(ub_trivial(gen_tight(6, 0.01)) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("ub_dmax: worked examples") {
    SUBCASE("two singletons reduce to D") {
        CHECK(ub_dmax(lstn_test::singletons({{0.0, 0.0}, {0.0, 2.5}})) == 2.5);
    }
    SUBCASE("unit equilateral singletons, best root drops one term") {
        const double h = std::sqrt(3.0) / 2.0;
        const auto inst = lstn_test::singletons({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}});
        CHECK(ub_dmax(inst) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("greedy example: equals the true optimum") {
        const auto inst = gen_example_greedy();
        const double expected = 1.0 + std::sqrt(3.0) / 2.0;
        CHECK(ub_dmax(inst) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(exact_opt(inst).length == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("ub_omega: formula and collapse to the trivial bound") {
    SUBCASE("x = 0.05, y = -0.1") {
        // X1 holds the 0.9 monochromatic pair; two singletons sit 0.05 from o.
        Instance inst;
        inst.dim = 2;
        inst.regions = {
            {0, "X1", {{0.0, 0.0}, {0.45, std::sqrt(0.81 - 0.2025)}}},
            {1, "X2", {{1.0, 0.0}}},
            {2, "X3", {{0.45, 0.0}}},
            {3, "X4", {{0.55, 0.0}}},
        };
        const auto view = normalize(inst);
        CHECK(view.scale == doctest::Approx(1.0).epsilon(1e-12));
        const auto om = omega(inst, view);
        CHECK(om.radius == doctest::Approx(0.05).epsilon(1e-12));
        const double expected = 3.0 * (1.0 + 0.05 + std::sqrt(3.0) / 2.0) / 2.0;
        CHECK(ub_omega(inst, view, om) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(ub_omega(inst, view, om) == doctest::Approx(3.0 * 0.9580127).epsilon(1e-6));
    }
    SUBCASE("large x collapses the min to 1") {
        const auto inst = gen_tight(6, 0.01);
        const auto view = normalize(inst);
        const auto om = omega(inst, view);
        // (1 + x + sqrt(3)/2)/2 > 1 here, so the bound equals the trivial one
        CHECK(ub_omega(inst, view, om) == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("gated on n >= 4") {
        const auto inst = lstn_test::singletons({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.5}});
        const auto view = normalize(inst);
        OmegaInfo om;
        CHECK_THROWS_AS(ub_omega(inst, view, om), std::invalid_argument);
        CHECK_THROWS_AS(ub_refined(inst, view, om), std::invalid_argument);
    }
}

TEST_CASE("ub_refined: worked examples") {
    SUBCASE("all omega regions at o") {
        Instance inst;
        inst.dim = 2;
        inst.regions = {
            {0, "X1", {{0.0, 0.0}}},
            {1, "X2", {{1.0, 0.0}}},
            {2, "X3", {{0.5, 0.0}}},
            {3, "X4", {{0.5, 0.0}}},
        };
        const auto view = normalize(inst);
        const auto om = omega(inst, view);
        const double expected = 1.5 * (1.0 + std::sqrt(3.0) / 2.0);  // z_hat = 0, y <= 0
        CHECK(ub_refined(inst, view, om) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(exact_opt(inst).length <= ub_refined(inst, view, om) + 1e-9);
    }
    SUBCASE("equal radii reduce the refined bound to the omega bound") {
        // all omega-region radii equal => z_hat = x, and (1 + x + R)/2 < 1 here
        Instance inst;
        inst.dim = 2;
        inst.regions = {
            {0, "X1", {{0.0, 0.0}}},
            {1, "X2", {{1.0, 0.0}}},
            {2, "X3", {{0.5, 0.05}}},
            {3, "X4", {{0.5, -0.05}}},
        };
        const auto view = normalize(inst);
        const auto om = omega(inst, view);
        CHECK(ub_refined(inst, view, om) == doctest::Approx(ub_omega(inst, view, om)).epsilon(1e-12));
    }
    SUBCASE("tight instance: min against the trivial bound") {
        const auto inst = gen_tight(6, 0.01);
        const auto view = normalize(inst);
        const auto om = omega(inst, view);
        // the refined expression slightly exceeds 5, so the min returns exactly 5
        CHECK(ub_refined(inst, view, om) == doctest::Approx(5.0).epsilon(1e-12));
    }
}

TEST_CASE("omega containment holds on every instance family") {
    CHECK(omega_containment_check(gen_example_star(), normalize(gen_example_star())));
    CHECK(omega_containment_check(gen_example_greedy(), normalize(gen_example_greedy())));
    for (std::size_t n : {4, 6, 20}) {
        const auto inst = gen_tight(n, 1.0 / static_cast<double>(n - 1));
        CHECK(omega_containment_check(inst, normalize(inst)));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = gen_random(2 + seed % 6, 3, 2 + seed % 2, 2000 + seed);
        CHECK(omega_containment_check(inst, normalize(inst)));
    }
}

TEST_CASE("compute_bounds: oracle never beats a bound, min structure holds") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto inst = gen_random(2 + seed % 6, 3, 2 + seed % 2, 2100 + seed);
        const auto report = compute_bounds(inst);
        const auto exact = exact_opt(inst);
        const double slack = 1e-9 * std::max(1.0, exact.length);
        CHECK(exact.length <= report.ub_trivial + slack);
        CHECK(exact.length <= report.ub_dmax + slack);
        if (report.ub_omega) CHECK(exact.length <= *report.ub_omega + slack);
        if (report.ub_refined) CHECK(exact.length <= *report.ub_refined + slack);
        CHECK(report.ub_best <= report.ub_trivial);
        CHECK(report.ub_best <= report.ub_dmax);
        if (report.ub_omega) CHECK(report.ub_best <= *report.ub_omega);
        if (report.ub_refined) {
            CHECK(report.ub_best <= *report.ub_refined);
            CHECK(*report.ub_refined <= report.ub_trivial + 1e-12);
        }
        if (report.ub_omega && (1.0 + *report.x + report.R_y) / 2.0 <= 1.0) {
            // away from the saturation point the three bounds are ordered
            CHECK(*report.ub_refined <= *report.ub_omega + 1e-12);
            CHECK(*report.ub_omega <= report.ub_trivial + 1e-12);
        }
        CHECK(report.y <= 1.0 + 1e-9);
        CHECK(report.y >= -1.0 - 1e-9);
    }
}

TEST_CASE("certified_ratio: exact solutions and degenerates") {
    SUBCASE("exact on the star example certifies 1") {
        const auto inst = gen_example_star();
        const auto report = compute_bounds(inst);
        const auto exact = exact_opt(inst);
        CHECK(certified_ratio(exact, report) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("degenerate instances certify 1") {
        const auto inst = lstn_test::singletons({{2.0, 2.0}, {2.0, 2.0}});
        const auto report = compute_bounds(inst);
        CHECK(report.degenerate);
        const auto sol = algo_a2(inst);
        CHECK(certified_ratio(sol, report) == 1.0);
    }
}

TEST_CASE("a2 certifies at least rho against the best bound, everywhere") {
    const double rho = ratio_constants().rho;
    auto check_instance = [&](const Instance& inst) {
        const auto report = compute_bounds(inst);
        const auto a2 = algo_a2(inst);
        CHECK(certified_ratio(a2, report) >= rho - 1e-9);
    };
    check_instance(gen_example_star());
    check_instance(gen_example_greedy());
    for (std::size_t n : {4, 10, 50, 100}) {
        check_instance(gen_tight(n, 1.0 / static_cast<double>(n - 1)));
    }
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        check_instance(gen_random(2 + seed % 6, 3, 2 + seed % 2, 2200 + seed));
    }
}
