#include "qip/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace qip {

State make_state(const Instance& inst, std::vector<long long> x) {
    State s;
    s.interaction = serial::compute_interactions(inst, x); // validates box
    s.value = serial::objective(inst, x);
    if (inst.constrained()) {
        s.slack = serial::compute_slacks(inst, x);
        for (long long bj : s.slack)
            if (bj < 0) throw std::invalid_argument("make_state: infeasible point");
    }
    s.x = std::move(x);
    return s;
}

namespace {

void require_move(const State& state, const Instance& inst, int i, long long y) {
    if (i < 0 || i >= inst.n()) throw std::out_of_range("move: index out of range");
    if (y < 0 || y > inst.upper(i)) throw std::invalid_argument("move: value outside [0, u_i]");
    (void)state;
}

} // namespace

long long delta_for_move(const State& state, const Instance& inst, int i, long long y) {
    require_move(state, inst, i, y);
    long long xi = state.x[static_cast<std::size_t>(i)];
    return (y - xi) * (inst.quad(i, i) * (y + xi) + state.interaction[static_cast<std::size_t>(i)]);
}

void apply_move(State& state, const Instance& inst, int i, long long y) {
    require_move(state, inst, i, y);
    long long xi = state.x[static_cast<std::size_t>(i)];
    long long step = y - xi;
    if (step == 0) return;

    if (inst.constrained()) {
        for (int j = 0; j < inst.m(); ++j)
            if (state.slack[static_cast<std::size_t>(j)] - inst.weight(j, i) * step < 0)
                throw std::invalid_argument("apply_move: move would violate a constraint");
    }

    state.value += delta_for_move(state, inst, i, y);
    for (int j = 0; j < i; ++j)
        state.interaction[static_cast<std::size_t>(j)] += step * inst.quad(j, i);
    auto row = inst.quad_row(i);
    for (int j = i + 1; j < inst.n(); ++j)
        state.interaction[static_cast<std::size_t>(j)] += step * row[static_cast<std::size_t>(j - i)];
    for (int j = 0; j < inst.m(); ++j)
        state.slack[static_cast<std::size_t>(j)] -= inst.weight(j, i) * step;
    state.x[static_cast<std::size_t>(i)] = y;
}

long long headroom(const State& state, const Instance& inst, int i) {
    if (i < 0 || i >= inst.n()) throw std::out_of_range("headroom: index out of range");
    long long best = -1;
    for (int j = 0; j < inst.m(); ++j) {
        long long w = inst.weight(j, i);
        if (w == 0) continue;
        long long cap = state.slack[static_cast<std::size_t>(j)] / w;
        best = best < 0 ? cap : std::min(best, cap);
    }
    if (best < 0) // no constraint limits i; the box does
        return inst.upper(i) - state.x[static_cast<std::size_t>(i)];
    return best;
}

} // namespace qip
