#pragma once

#include <span>
#include <vector>

#include "qip/instance.hpp"

namespace qip {

/// Full-recompute kernels over the dense upper-triangular form. The default
/// entry points parallelize the O(n^2) loops with OpenMP; qip::serial holds
/// the straightforward single-threaded versions, kept as the reference the
/// tests compare against. Integer sums are order-independent, so both paths
/// return bit-identical results.

/// d.x + sum_{i<=j} q(i,j) x_i x_j, exact.
long long objective(const Instance& inst, std::span<const long long> x);

/// Interaction terms: M(i) = d_i + sum_{j<i} q(j,i) x_j + sum_{j>i} q(i,j) x_j.
/// Excludes the diagonal term q(i,i) x_i.
std::vector<long long> compute_interactions(const Instance& inst, std::span<const long long> x);

/// Uncommitted budgets: B_j = b_j - sum_i a(j,i) x_i.
std::vector<long long> compute_slacks(const Instance& inst, std::span<const long long> x);

/// True iff 0 <= x_i <= u_i for all i and A.x <= b.
bool is_feasible(const Instance& inst, std::span<const long long> x);

namespace serial {
long long objective(const Instance& inst, std::span<const long long> x);
std::vector<long long> compute_interactions(const Instance& inst, std::span<const long long> x);
std::vector<long long> compute_slacks(const Instance& inst, std::span<const long long> x);
} // namespace serial

/// q_ii * y^2 + M_i * y, the part of the objective that depends on one
/// variable alone. Checked: throws std::overflow_error outside 64-bit range.
long long partial_value(long long q_ii, long long m_i, long long y);

} // namespace qip
