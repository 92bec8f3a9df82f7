#include "qip/local_search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qip/selection.hpp"

namespace qip {

std::vector<int> random_sequence(int n, Rng& rng) {
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
    for (auto& k : keys) k = rng.next_u64();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    return order;
}

long long select_best_value(const State& state, const Instance& inst, int i) {
    long long q = inst.quad(i, i);
    long long m = state.interaction[static_cast<std::size_t>(i)];
    long long xi = state.x[static_cast<std::size_t>(i)];
    if (!inst.constrained())
        return best_value_unconstrained(q, m, inst.upper(i), xi);
    return best_value_constrained(q, m, inst.upper(i), xi, headroom(state, inst, i));
}

SweepOutcome one_opt(State& state, const Instance& inst, Rng& rng) {
    SweepOutcome out;
    bool flag = true;
    while (flag) {
        flag = false;
        auto order = random_sequence(inst.n(), rng);
        for (int i : order) {
            long long y = select_best_value(state, inst, i);
            if (y == state.x[static_cast<std::size_t>(i)]) continue;
            // Zero-delta ties are not applied; f strictly increases per move.
            if (delta_for_move(state, inst, i, y) <= 0) continue;
            apply_move(state, inst, i, y);
            ++out.moves_applied;
            flag = true;
        }
    }
    out.improved = out.moves_applied > 0;
    out.final_value = state.value;
    return out;
}

bool is_one_opt_local_optimum(const State& state, const Instance& inst) {
    for (int i = 0; i < inst.n(); ++i) {
        long long y = select_best_value(state, inst, i);
        long long xi = state.x[static_cast<std::size_t>(i)];
        if (y != xi && delta_for_move(state, inst, i, y) > 0) return false;
    }
    return true;
}

} // namespace qip
