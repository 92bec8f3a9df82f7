#include "qip/tabu.hpp"

#include <algorithm>
#include <stdexcept>

namespace qip {

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void maybe_update_incumbent(Incumbent& inc, const State& state, Clock::time_point start) {
    if (state.value > inc.value) {
        inc.value = state.value;
        inc.x = state.x;
        inc.seconds_to_best = seconds_since(start);
    }
}

} // namespace

SweepOutcome construction_phase(State& state, const Instance& inst, TabuMemory& tabu,
                                Incumbent& incumbent, Rng& rng, Clock::time_point start) {
    SweepOutcome out;
    bool flag = true;
    while (flag) {
        flag = false;
        auto order = random_sequence(inst.n(), rng);
        for (int i : order) {
            long long y = select_best_value(state, inst, i);
            if (y == state.x[static_cast<std::size_t>(i)]) continue;
            long long delta = delta_for_move(state, inst, i, y);
            if (delta <= 0) continue;
            long long candidate = state.value + delta;
            if (!tabu.admissible(i) && candidate <= incumbent.value) continue;
            apply_move(state, inst, i, y);
            maybe_update_incumbent(incumbent, state, start);
            tabu.stamp_and_decay(i, tabu.tenure + 1);
            ++out.moves_applied;
            flag = true;
        }
    }
    out.improved = out.moves_applied > 0;
    out.final_value = state.value;
    return out;
}

long long draw_perturbation_size(int n, Rng& rng) {
    // Open interval (n/400 + 5, n/80 + 30): smallest admissible integer is
    // floor(lo) + 1, largest is ceil(hi) - 1, both exact in integer math.
    long long lo = (static_cast<long long>(n) + 2000) / 400 + 1;
    long long hi = (static_cast<long long>(n) + 2400 + 79) / 80 - 1;
    long long p = rng.uniform_int(lo, hi);
    return std::clamp(p, 1LL, static_cast<long long>(n));
}

long long destruction_phase(State& state, const Instance& inst, TabuMemory& tabu, Rng& rng) {
    auto order = random_sequence(inst.n(), rng);
    long long p = draw_perturbation_size(inst.n(), rng);
    long long perturbed = 0;
    for (long long k = 1; k <= p; ++k) {
        int i = order[static_cast<std::size_t>(k - 1)];
        long long xi = state.x[static_cast<std::size_t>(i)];
        long long y;
        if (xi > 0) {
            y = rng.uniform_int(0, xi); // may redraw x_i; still counts as perturbed
        } else {
            long long cap = inst.upper(i);
            if (inst.constrained()) cap = std::min(cap, headroom(state, inst, i));
            if (cap == 0) continue; // nothing feasible to raise
            y = rng.uniform_int(1, cap);
        }
        apply_move(state, inst, i, y);
        tabu.stamp_and_decay(i, tabu.tenure + p + 1 - k);
        ++perturbed;
    }
    return perturbed;
}

std::pair<Incumbent, TsosReport> tsos(const Instance& inst, const TsosConfig& config) {
    if (!config.time_limit && !config.round_limit)
        throw std::invalid_argument("tsos: set a time limit or a round limit");
    if (config.round_limit && *config.round_limit < 0)
        throw std::invalid_argument("tsos: round limit must be non-negative");

    const auto start = Clock::now();
    long long tenure = config.tenure > 0 ? config.tenure : 10 + inst.n() / 1000;
    Rng rng(config.seed);
    State state = make_state(inst, std::vector<long long>(static_cast<std::size_t>(inst.n()), 0));
    TabuMemory tabu(inst.n(), tenure);
    Incumbent incumbent{state.x, state.value, 0.0};
    TsosReport report;

    auto improve = [&]() {
        report.construction_moves +=
            construction_phase(state, inst, tabu, incumbent, rng, start).moves_applied;
        report.local_search_moves += one_opt(state, inst, rng).moves_applied;
        maybe_update_incumbent(incumbent, state, start);
    };

    improve();
    for (;;) {
        if (config.round_limit && report.rounds_completed >= *config.round_limit) break;
        if (config.time_limit && seconds_since(start) >= *config.time_limit) break;
        report.destruction_moves += destruction_phase(state, inst, tabu, rng);
        improve();
        ++report.rounds_completed;
    }

    report.elapsed_seconds = seconds_since(start);
    return {std::move(incumbent), report};
}

} // namespace qip
