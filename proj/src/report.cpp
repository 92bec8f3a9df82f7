#include "qip/report.hpp"

#include <stdexcept>

namespace qip {

double rpd(long long bfs, long long ofv) {
    if (bfs <= 0) throw std::invalid_argument("rpd: best-found value must be positive");
    return 100.0 * static_cast<double>(bfs - ofv) / static_cast<double>(bfs);
}

ExtremeValueStats extreme_value_stats(const Instance& inst, std::span<const long long> x) {
    if (static_cast<int>(x.size()) != inst.n())
        throw std::invalid_argument("extreme_value_stats: |x| != n");
    long long at_zero = 0, at_upper = 0, interior = 0;
    for (int i = 0; i < inst.n(); ++i) {
        if (x[i] < 0 || x[i] > inst.upper(i))
            throw std::invalid_argument("extreme_value_stats: x outside [0, u]");
        if (inst.upper(i) == 0 || x[i] == inst.upper(i))
            ++at_upper;
        else if (x[i] == 0)
            ++at_zero;
        else
            ++interior;
    }
    double n = static_cast<double>(inst.n());
    return {100.0 * static_cast<double>(at_zero) / n, 100.0 * static_cast<double>(at_upper) / n,
            100.0 * static_cast<double>(interior) / n};
}

} // namespace qip
