#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qip/instance.hpp"

namespace qip {

/// Instance text format (ASCII, single-space separated):
///   QIP1 <uqip|cqip>
///   <n> <m>
///   u <n integers>
///   d <n integers>
///   Q <q_ii ... q_in>        one line per row i
///   A <n integers>           one line per constraint (cqip only)
///   b <m integers>           (cqip only)
/// The writer is deterministic; write -> read is the identity.
void write_instance(const Instance& inst, std::ostream& out);
void write_instance_file(const Instance& inst, const std::string& path);

/// Parse errors carry the offending line number.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

/// Solution file:
///   QIPSOL1
///   <instance name>
///   <objective>
///   <n integers>
/// The stored objective is a claim; callers re-verify it against the instance.
struct Solution {
    std::string instance_name;
    long long objective = 0;
    std::vector<long long> x;
};

void write_solution_file(const Solution& sol, const std::string& path);
Solution read_solution_file(const std::string& path);

} // namespace qip
