#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lstn/generators.hpp"
#include "lstn/oracle.hpp"
#include "test_util.hpp"

using namespace lstn;

TEST_CASE("count_selections") {
    CHECK(count_selections(lstn_test::singletons(
              {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}})) == 1);
    CHECK(count_selections(gen_example_star()) == 24);  // 2*2*2*3
    CHECK(count_selections(gen_tight(100, 1.0 / 99.0)) == 4);
    const auto big = gen_random(64, 4, 2, 1);  // up to 4^64, must saturate, not overflow
    CHECK(count_selections(big) >= count_selections(gen_random(8, 4, 2, 1)));
}

TEST_CASE("exact_opt: named instances") {
    CHECK(exact_opt(gen_example_star()).length == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(exact_opt(gen_example_greedy()).length ==
          doctest::Approx(1.0 + std::sqrt(3.0) / 2.0).epsilon(1e-12));
    SUBCASE("tight instance n = 20: the apex star") {
        const auto inst = gen_tight(20, 1.0 / 19.0);
        const auto sol = exact_opt(inst);
        CHECK(sol.length >= 18.0 - 1e-9);  // (1 - eps)(n - 1)
        CHECK(sol.producer == Producer::Exact);
        CHECK(is_spanning_tree(20, sol.tree.edges));
    }
}

TEST_CASE("exact_opt: budget refusal is explicit") {
    const auto inst = gen_example_star();
    try {
        exact_opt(inst, 10);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.required == 24);
        CHECK(e.budget == 10);
        CHECK(std::string(e.what()).find("24") != std::string::npos);
    }
    CHECK_NOTHROW(exact_opt(inst, 24));
}

TEST_CASE("exact_opt: all-singleton instances reduce to one max spanning tree") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = gen_random(2 + seed % 6, 1, 2 + seed % 2, 2500 + seed);
        const auto sel = lstn_test::selection_of_first_vertices(inst);
        const auto direct = max_spanning_tree(sel);
        const auto sol = exact_opt(inst);
        CHECK(sol.length == direct.length);
        CHECK(sol.tree.edges == direct.edges);
        CHECK(sol.selection.vertex_indices == sel.vertex_indices);
    }
}

TEST_CASE("exact_opt: invariant under region reordering and rigid motion") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto inst = gen_random(3 + seed % 4, 3, 2, 2600 + seed);
        const double base = exact_opt(inst).length;

        Instance reversed = inst;
        std::reverse(reversed.regions.begin(), reversed.regions.end());
        for (std::size_t r = 0; r < reversed.n(); ++r) reversed.regions[r].id = r;
        CHECK(exact_opt(reversed).length == doctest::Approx(base).epsilon(1e-9));

        const auto moved = lstn_test::apply_rigid_motion(inst, 31 + seed);
        CHECK(exact_opt(moved).length == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("exact_opt: lexicographically smallest maximizer wins ties") {
    // two regions with duplicated vertices: every selection yields the same tree length
    Instance inst;
    inst.dim = 2;
    inst.regions = {
        {0, "X1", {{0.0, 0.0}, {0.0, 0.0}}},
        {1, "X2", {{1.0, 0.0}, {1.0, 0.0}}},
    };
    const auto sol = exact_opt(inst);
    CHECK(sol.length == 1.0);
    CHECK(sol.selection.vertex_indices == std::vector<std::size_t>{0, 0});
}
