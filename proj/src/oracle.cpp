#include "qip/oracle.hpp"

#include <stdexcept>

#include "qip/eval.hpp"

namespace qip {

GlobalOptimum brute_force_global(const Instance& inst, EnumerationBudget budget) {
    __int128 points = 1;
    for (int i = 0; i < inst.n(); ++i) {
        points *= inst.upper(i) + 1;
        if (points > budget.max_points)
            throw std::runtime_error(
                "brute_force_global: lattice exceeds the enumeration budget; use property tests instead");
    }

    std::vector<long long> x(static_cast<std::size_t>(inst.n()), 0);
    GlobalOptimum best{x, serial::objective(inst, x)}; // x = 0 is always feasible
    for (;;) {
        // Lexicographic odometer, least-significant index last.
        int i = inst.n() - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == inst.upper(i)) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
        if (!is_feasible(inst, x)) continue;
        long long v = serial::objective(inst, x);
        if (v > best.value) best = {x, v};
    }
    return best;
}

std::pair<long long, long long> brute_force_best_single(const State& state, const Instance& inst,
                                                        int i) {
    long long cap = inst.upper(i);
    if (inst.constrained())
        cap = std::min(cap, state.x[static_cast<std::size_t>(i)] + headroom(state, inst, i));
    long long q = inst.quad(i, i);
    long long m = state.interaction[static_cast<std::size_t>(i)];
    long long y_best = 0;
    long long v_best = partial_value(q, m, 0);
    for (long long y = 1; y <= cap; ++y) {
        long long v = partial_value(q, m, y);
        if (v > v_best) {
            y_best = y;
            v_best = v;
        }
    }
    return {y_best, v_best};
}

bool check_local_optimality_by_enumeration(const State& state, const Instance& inst) {
    long long current = serial::objective(inst, state.x);
    std::vector<long long> probe = state.x;
    for (int i = 0; i < inst.n(); ++i) {
        long long xi = probe[static_cast<std::size_t>(i)];
        for (long long y = 0; y <= inst.upper(i); ++y) {
            if (y == xi) continue;
            probe[static_cast<std::size_t>(i)] = y;
            if (is_feasible(inst, probe) && serial::objective(inst, probe) > current) return false;
        }
        probe[static_cast<std::size_t>(i)] = xi;
    }
    return true;
}

} // namespace qip
