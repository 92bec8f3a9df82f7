#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "qip/instance.hpp"

namespace qip {

/// Relative percentage deviation from the batch best: 100 * (bfs - ofv) / bfs.
double rpd(long long bfs, long long ofv);

struct ExtremeValueStats {
    double pct_at_zero = 0.0;
    double pct_at_upper = 0.0;
    double pct_interior = 0.0;
};

/// Share of variables sitting at 0, at their upper bound, or strictly
/// between. Variables with u_i = 0 are at both extremes and tally as
/// at-upper.
ExtremeValueStats extreme_value_stats(const Instance& inst, std::span<const long long> x);

/// One solver run, as reported on the CSV boundary.
struct RunReport {
    std::string instance_name;
    std::string algorithm; // "1opt" or "tsos"
    std::uint64_t seed = 0;
    long long ofv = 0;
    double seconds_to_best = 0.0;
    long long rounds_completed = 0;
    bool feasible = false;
};

} // namespace qip
