#pragma once

#include <vector>

#include "qip/instance.hpp"
#include "qip/rng.hpp"
#include "qip/state.hpp"

namespace qip {

struct SweepOutcome {
    bool improved = false;
    long long moves_applied = 0;
    long long final_value = 0;
};

/// Uniform random permutation of 0..n-1, realized by sorting random keys.
std::vector<int> random_sequence(int n, Rng& rng);

/// Exhaustive 1-Opt local search: sweeps over fresh random permutations,
/// moving each variable to its closed-form best value, until a full sweep
/// applies no move. Strictly improving moves only, so termination is
/// guaranteed; on return the state is a 1-Opt local optimum.
SweepOutcome one_opt(State& state, const Instance& inst, Rng& rng);

/// True iff no single-variable change within bounds (and budget headroom,
/// when constrained) improves the objective. Decided by comparing the
/// closed-form best value against the current value, not by enumeration.
bool is_one_opt_local_optimum(const State& state, const Instance& inst);

/// Best value of variable i in the current state, honoring headroom on
/// constrained instances. Shared by one_opt and the tabu search phases.
long long select_best_value(const State& state, const Instance& inst, int i);

} // namespace qip
