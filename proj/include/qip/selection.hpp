#pragma once

namespace qip {

/// Closed-form best single-variable values. All rational comparisons
/// (against y2 = -M/q and the vertex y* = -M/2q) are done by exact integer
/// cross-multiplication; no floating point is involved, because borderline
/// comparisons decide moves.

/// Nearest integer to the vertex y* = -M_i / (2 q_ii); half-integers round
/// away from zero. The objective value is tie-invariant: at a half-integer
/// vertex the two neighbors score equally.
long long round_to_candidate(long long m_i, long long q_ii);

/// Integer y in [0, u_i] maximizing q_ii y^2 + M_i y. x_i breaks the fully
/// indifferent case q_ii = 0, M_i = 0 (no move).
long long best_value_unconstrained(long long q_ii, long long m_i, long long u_i, long long x_i);

/// Same, with the feasible range capped at x_i + alpha_i (remaining budget
/// headroom): maximizes over y in [0, min(u_i, x_i + alpha_i)].
long long best_value_constrained(long long q_ii, long long m_i, long long u_i, long long x_i,
                                 long long alpha_i);

} // namespace qip
