#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qip/instance.hpp"
#include "qip/local_search.hpp"
#include "qip/rng.hpp"
#include "qip/state.hpp"

namespace qip {

/// Per-variable recency memory. A variable is admissible iff its counter is
/// zero; counters are stamped on application and decay by one per applied
/// move.
struct TabuMemory {
    explicit TabuMemory(int n, long long tenure_)
        : counter(static_cast<std::size_t>(n), 0), tenure(tenure_) {}

    bool admissible(int i) const { return counter[static_cast<std::size_t>(i)] == 0; }

    void stamp_and_decay(int i, long long value) {
        counter[static_cast<std::size_t>(i)] = value;
        for (auto& c : counter)
            if (c > 0) --c;
    }

    std::vector<long long> counter;
    long long tenure;
};

/// Best solution seen so far, with the wall-clock moment it was reached.
struct Incumbent {
    std::vector<long long> x;
    long long value = 0;
    double seconds_to_best = 0.0;
};

struct TsosConfig {
    long long tenure = 0;                   // 0: default 10 + n/1000
    std::optional<double> time_limit;       // seconds, wall clock
    std::optional<long long> round_limit;   // destruction/construction cycles
    std::uint64_t seed = 0;
};

struct TsosReport {
    long long rounds_completed = 0;
    long long construction_moves = 0;
    long long destruction_moves = 0;
    long long local_search_moves = 0;
    double elapsed_seconds = 0.0;
};

using Clock = std::chrono::steady_clock;

/// Tabu-filtered improvement sweeps: at each variable the closed-form best
/// value is taken when the variable is admissible or the move would beat the
/// incumbent (aspiration). Applied moves stamp tenure + 1 and decay all
/// counters; the incumbent is updated after every applied move. Loops until
/// a sweep applies nothing.
SweepOutcome construction_phase(State& state, const Instance& inst, TabuMemory& tabu,
                                Incumbent& incumbent, Rng& rng, Clock::time_point start);

/// Perturbation width: a uniform integer strictly inside the open interval
/// (n/400 + 5, n/80 + 30), clamped to [1, n].
long long draw_perturbation_size(int n, Rng& rng);

/// Randomizing phase: perturbs p randomly ordered variables, drawing a new
/// value in [0, x_i] for positive variables and in [1, cap] for zero ones
/// (cap honors headroom when constrained; zero-cap variables are skipped).
/// Moves apply unconditionally and stamp tenure + p + 1 - k. Returns the
/// count of perturbed variables.
long long destruction_phase(State& state, const Instance& inst, TabuMemory& tabu, Rng& rng);

/// Tabu search with oscillation: from x = 0, alternates
/// {construction; 1-Opt; incumbent update; destruction} until the round or
/// time limit. Fixed seed and round limit make the result bit-reproducible.
std::pair<Incumbent, TsosReport> tsos(const Instance& inst, const TsosConfig& config);

} // namespace qip
