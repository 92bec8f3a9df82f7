#include "qip/eval.hpp"

#include <stdexcept>

namespace qip {

namespace {

void require_dims(const Instance& inst, std::span<const long long> x) {
    if (static_cast<int>(x.size()) != inst.n())
        throw std::invalid_argument("evaluation: |x| != n");
}

void require_box(const Instance& inst, std::span<const long long> x) {
    for (int i = 0; i < inst.n(); ++i)
        if (x[i] < 0 || x[i] > inst.upper(i))
            throw std::invalid_argument("evaluation: x outside [0, u]");
}

long long row_contribution(const Instance& inst, std::span<const long long> x, int i) {
    auto row = inst.quad_row(i);
    long long s = inst.linear(i) + row[0] * x[i];
    for (int j = i + 1; j < inst.n(); ++j)
        s += row[static_cast<std::size_t>(j - i)] * x[j];
    return s * x[i];
}

long long interaction_at(const Instance& inst, std::span<const long long> x, int i) {
    long long s = inst.linear(i);
    for (int j = 0; j < i; ++j)
        s += inst.quad(j, i) * x[j];
    auto row = inst.quad_row(i);
    for (int j = i + 1; j < inst.n(); ++j)
        s += row[static_cast<std::size_t>(j - i)] * x[j];
    return s;
}

long long slack_at(const Instance& inst, std::span<const long long> x, int j) {
    long long used = 0;
    auto row = inst.weight_row(j);
    for (int i = 0; i < inst.n(); ++i)
        used += row[static_cast<std::size_t>(i)] * x[i];
    return inst.rhs(j) - used;
}

} // namespace

long long objective(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    require_box(inst, x);
    long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (int i = 0; i < inst.n(); ++i)
        total += row_contribution(inst, x, i);
    return total;
}

std::vector<long long> compute_interactions(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    require_box(inst, x);
    std::vector<long long> m(static_cast<std::size_t>(inst.n()));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < inst.n(); ++i)
        m[static_cast<std::size_t>(i)] = interaction_at(inst, x, i);
    return m;
}

std::vector<long long> compute_slacks(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    std::vector<long long> slack(static_cast<std::size_t>(inst.m()));
#pragma omp parallel for schedule(static)
    for (int j = 0; j < inst.m(); ++j)
        slack[static_cast<std::size_t>(j)] = slack_at(inst, x, j);
    return slack;
}

bool is_feasible(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    for (int i = 0; i < inst.n(); ++i)
        if (x[i] < 0 || x[i] > inst.upper(i)) return false;
    for (int j = 0; j < inst.m(); ++j)
        if (slack_at(inst, x, j) < 0) return false;
    return true;
}

namespace serial {

long long objective(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    require_box(inst, x);
    long long total = 0;
    for (int i = 0; i < inst.n(); ++i)
        total += row_contribution(inst, x, i);
    return total;
}

std::vector<long long> compute_interactions(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    require_box(inst, x);
    std::vector<long long> m(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i)
        m[static_cast<std::size_t>(i)] = interaction_at(inst, x, i);
    return m;
}

std::vector<long long> compute_slacks(const Instance& inst, std::span<const long long> x) {
    require_dims(inst, x);
    std::vector<long long> slack(static_cast<std::size_t>(inst.m()));
    for (int j = 0; j < inst.m(); ++j)
        slack[static_cast<std::size_t>(j)] = slack_at(inst, x, j);
    return slack;
}

} // namespace serial

long long partial_value(long long q_ii, long long m_i, long long y) {
    __int128 v = static_cast<__int128>(q_ii) * y * y + static_cast<__int128>(m_i) * y;
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("partial_value: outside 64-bit range");
    return static_cast<long long>(v);
}

} // namespace qip
