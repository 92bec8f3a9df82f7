#pragma once

#include <vector>

#include "qip/eval.hpp"
#include "qip/instance.hpp"

namespace qip {

/// Mutable search state: the current point plus cached interaction terms,
/// objective value, and constraint slacks. All caches are exact; apply_move
/// maintains them incrementally in O(n + m).
struct State {
    std::vector<long long> x;
    std::vector<long long> interaction; // M(i)
    std::vector<long long> slack;       // B_j, empty for unconstrained
    long long value = 0;                // f(x)
};

/// Builds a consistent state from a point inside the box (feasible for
/// constrained instances).
State make_state(const Instance& inst, std::vector<long long> x);

/// Objective change of setting x_i := y, in O(1):
/// E = (y - x_i) * [q_ii (y + x_i) + M(i)].
long long delta_for_move(const State& state, const Instance& inst, int i, long long y);

/// Sets x_i := y, updating f, M, and B incrementally. Rejects moves out of
/// [0, u_i] and constrained moves that would drive any slack negative.
/// y == x_i is a no-op.
void apply_move(State& state, const Instance& inst, int i, long long y);

/// Maximum feasible increase of x_i: min over constraints j with a(j,i) > 0
/// of floor(B_j / a(j,i)); u_i - x_i when no constraint touches i.
long long headroom(const State& state, const Instance& inst, int i);

} // namespace qip
