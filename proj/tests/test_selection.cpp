#include "doctest.h"

#include <algorithm>

#include "qip/eval.hpp"
#include "qip/rng.hpp"
#include "qip/selection.hpp"

using namespace qip;

namespace {

long long brute_best_value(long long q, long long m, long long cap) {
    long long best = partial_value(q, m, 0);
    for (long long y = 1; y <= cap; ++y) best = std::max(best, partial_value(q, m, y));
    return best;
}

} // namespace

TEST_CASE("round_to_candidate") {
    CHECK(round_to_candidate(4, -1) == 2);    // y* = 2
    CHECK(round_to_candidate(5, -1) == 3);    // y* = 2.5, away from zero
    CHECK(round_to_candidate(-5, 2) == 1);    // y* = 1.25
    CHECK(round_to_candidate(-3, 2) == 1);    // y* = 0.75
    CHECK(round_to_candidate(3, 2) == -1);    // y* = -0.75
    CHECK(round_to_candidate(2, 2) == -1);    // y* = -0.5, away from zero
    CHECK_THROWS(round_to_candidate(1, 0));
}

TEST_CASE("half-integer vertex: both neighbors score equally") {
    CHECK(partial_value(-1, 5, 2) == 6);
    CHECK(partial_value(-1, 5, 3) == 6);
}

TEST_CASE("best_value_unconstrained: worked cases") {
    CHECK(best_value_unconstrained(-1, 4, 10, 0) == 2);
    CHECK(partial_value(-1, 4, 2) == 4);
    CHECK(best_value_unconstrained(2, -5, 4, 0) == 4); // u > y2 = 2.5
    CHECK(partial_value(2, -5, 4) == 12);
    CHECK(best_value_unconstrained(2, -5, 2, 0) == 0); // u < y2
    CHECK(best_value_unconstrained(0, -3, 7, 5) == 0);
    CHECK(best_value_unconstrained(3, 1, 5, 0) == 5);  // y2 <= 0
    CHECK(best_value_unconstrained(0, 0, 7, 4) == 4);  // indifferent, no move
}

TEST_CASE("best_value_constrained: worked cases") {
    CHECK(best_value_constrained(-1, 4, 10, 0, 1) == 1);
    CHECK(partial_value(-1, 4, 1) == 3);
    CHECK(best_value_constrained(2, -5, 4, 0, 3) == 3); // U1 = 3 > y2 = 2.5
    CHECK(partial_value(2, -5, 3) == 3);
    CHECK(best_value_constrained(0, 5, 9, 2, 4) == 6);  // U1 = min(9, 6)
    CHECK(best_value_constrained(2, -5, 4, 0, 2) == 0); // U1 = 2 < y2
}

TEST_CASE("value-optimality on a randomized grid") {
    Rng rng(11);
    for (int t = 0; t < 20000; ++t) {
        long long q = rng.uniform_int(-10, 10);
        long long m = rng.uniform_int(-50, 50);
        long long u = rng.uniform_int(0, 10);
        long long x = rng.uniform_int(0, u);
        long long y = best_value_unconstrained(q, m, u, x);
        CHECK(y >= 0);
        CHECK(y <= u);
        CHECK(partial_value(q, m, y) == brute_best_value(q, m, u));

        long long alpha = rng.uniform_int(0, 10);
        long long cap = std::min(u, x + alpha);
        long long yc = best_value_constrained(q, m, u, x, alpha);
        CHECK(yc >= 0);
        CHECK(yc <= cap);
        CHECK(partial_value(q, m, yc) == brute_best_value(q, m, cap));
    }
}

TEST_CASE("convex case never picks an interior point") {
    Rng rng(12);
    for (int t = 0; t < 5000; ++t) {
        long long q = rng.uniform_int(1, 10);
        long long m = rng.uniform_int(-50, 50);
        long long u = rng.uniform_int(0, 10);
        long long y = best_value_unconstrained(q, m, u, 0);
        CHECK((y == 0 || y == u));
        long long alpha = rng.uniform_int(0, 10);
        long long cap = std::min(u, 0 + alpha);
        long long yc = best_value_constrained(q, m, u, 0, alpha);
        CHECK((yc == 0 || yc == cap));
    }
}

TEST_CASE("binary reduction: chosen value scores max(0, q + M)") {
    Rng rng(13);
    for (int t = 0; t < 2000; ++t) {
        long long q = rng.uniform_int(-10, 10);
        long long m = rng.uniform_int(-50, 50);
        long long y = best_value_unconstrained(q, m, 1, 0);
        CHECK(partial_value(q, m, y) == std::max(0LL, q + m));
    }
}
