#include "doctest.h"

#include <array>
#include <cmath>
#include <map>

#include "qip/eval.hpp"
#include "qip/local_search.hpp"
#include "qip/oracle.hpp"
#include "test_helpers.hpp"

using namespace qip;
using testutil::random_instance;
using testutil::two_var_constrained;
using testutil::two_var_instance;

TEST_CASE("random_sequence is a permutation and is reproducible") {
    Rng rng(1);
    CHECK(random_sequence(1, rng) == std::vector<int>{0});

    Rng a(42), b(42);
    CHECK(random_sequence(7, a) == random_sequence(7, b));

    Rng c(42), d(43);
    auto perm = random_sequence(100, c);
    std::vector<bool> seen(100, false);
    for (int v : perm) {
        REQUIRE(v >= 0);
        REQUIRE(v < 100);
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = true;
    }
    CHECK(random_sequence(100, c) != random_sequence(100, d));
}

TEST_CASE("random_sequence is uniform over permutations of 4") {
    Rng rng(99);
    std::map<std::array<int, 4>, int> counts;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        auto p = random_sequence(4, rng);
        counts[{p[0], p[1], p[2], p[3]}]++;
    }
    CHECK(counts.size() == 24);
    // Binomial(10^4, 1/24): mean ~416.7, sigma ~20; assert within 3 sigma.
    double mean = draws / 24.0;
    double sigma = std::sqrt(draws * (1.0 / 24) * (23.0 / 24));
    for (const auto& [perm, c] : counts) {
        CHECK(c > mean - 3 * sigma);
        CHECK(c < mean + 3 * sigma);
    }
}

TEST_CASE("one_opt reaches the all-upper corner on an all-positive instance") {
    Instance inst = two_var_instance();
    Rng rng(5);
    State state = make_state(inst, {0, 0});
    auto out = one_opt(state, inst, rng);
    CHECK(state.x == std::vector<long long>{2, 2});
    CHECK(state.value == 54);
    CHECK(out.final_value == 54);
    CHECK(out.improved);
    CHECK(is_one_opt_local_optimum(state, inst));

    // Idempotent at a local optimum.
    auto again = one_opt(state, inst, rng);
    CHECK(again.moves_applied == 0);
    CHECK_FALSE(again.improved);
}

TEST_CASE("one_opt on the constrained variant stays feasible and locally optimal") {
    Instance inst = two_var_constrained(7);
    Rng rng(5);
    State state = make_state(inst, {0, 0});
    long long f0 = state.value;
    one_opt(state, inst, rng);
    CHECK(is_feasible(inst, state.x));
    CHECK(state.value >= f0);
    CHECK(is_one_opt_local_optimum(state, inst));
    CHECK(check_local_optimality_by_enumeration(state, inst));
    for (int i = 0; i < inst.n(); ++i) {
        auto [y, v] = brute_force_best_single(state, inst, i);
        CHECK(partial_value(inst.quad(i, i), state.interaction[static_cast<std::size_t>(i)],
                            state.x[static_cast<std::size_t>(i)]) == v);
    }
}

TEST_CASE("is_one_opt_local_optimum") {
    Instance inst = two_var_instance();
    State at_zero = make_state(inst, {0, 0});
    CHECK_FALSE(is_one_opt_local_optimum(at_zero, inst)); // raising x1 to 2 improves

    Instance frozen = Instance::create({1, 2}, {3, 4, 5}, {0, 0});
    State pinned = make_state(frozen, {0, 0});
    CHECK(is_one_opt_local_optimum(pinned, frozen));
}

TEST_CASE("one_opt output agrees with the enumeration oracle on random instances") {
    Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform_int(2, 5));
        int m = t % 2 == 0 ? 0 : static_cast<int>(rng.uniform_int(1, 2));
        Instance inst = random_instance(rng, n, m, 10, 4);
        State state = make_state(inst, std::vector<long long>(static_cast<std::size_t>(n), 0));
        long long f0 = state.value;
        one_opt(state, inst, rng);
        CHECK(state.value >= f0);
        CHECK(is_feasible(inst, state.x));
        CHECK(is_one_opt_local_optimum(state, inst));
        CHECK(check_local_optimality_by_enumeration(state, inst));
    }
}
