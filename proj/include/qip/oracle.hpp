#pragma once

#include <utility>
#include <vector>

#include "qip/instance.hpp"
#include "qip/state.hpp"

namespace qip {

/// Brute-force ground truth for desk-scale verification. Deliberately naive:
/// its only virtue is being obviously correct, so it stays independent of
/// the incremental evaluation and closed-form selection it checks.

struct EnumerationBudget {
    long long max_points = 20'000'000; // cap on prod(u_i + 1) lattice points
};

struct GlobalOptimum {
    std::vector<long long> x;
    long long value = 0;
};

/// Enumerates every lattice point of the box in lexicographic order,
/// filtering by feasibility. Among tied maximizers, returns the
/// lexicographically smallest. Throws when the box exceeds the budget.
GlobalOptimum brute_force_global(const Instance& inst, EnumerationBudget budget = {});

/// (y_best, best value) of q_ii y^2 + M_i y over y in 0..u_i, capped at
/// x_i + headroom(i) for constrained instances.
std::pair<long long, long long> brute_force_best_single(const State& state, const Instance& inst,
                                                        int i);

/// True iff no feasible single-variable change improves the objective,
/// decided by full objective recomputation for every candidate value.
bool check_local_optimality_by_enumeration(const State& state, const Instance& inst);

} // namespace qip
