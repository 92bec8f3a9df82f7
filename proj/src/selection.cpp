#include "qip/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace qip {

namespace {

// cap > y2 where y2 = -m / q and q > 0, compared exactly.
bool exceeds_root(long long cap, long long q_ii, long long m_i) {
    return static_cast<__int128>(cap) * q_ii > -static_cast<__int128>(m_i);
}

} // namespace

long long round_to_candidate(long long m_i, long long q_ii) {
    if (q_ii == 0) throw std::invalid_argument("round_to_candidate: q_ii must be nonzero");
    __int128 num = -static_cast<__int128>(m_i);
    __int128 den = 2 * static_cast<__int128>(q_ii);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    // Nearest integer to num/den with halves away from zero; den > 0 here.
    __int128 r = num >= 0 ? (2 * num + den) / (2 * den) : -((2 * (-num) + den) / (2 * den));
    return static_cast<long long>(r);
}

long long best_value_unconstrained(long long q_ii, long long m_i, long long u_i, long long x_i) {
    if (q_ii < 0) {
        // Concave parabola; y2 > 0 iff m > 0.
        if (m_i <= 0) return 0;
        return std::min(u_i, round_to_candidate(m_i, q_ii));
    }
    if (q_ii > 0) {
        // Convex; maximum at an endpoint of [0, u].
        if (m_i >= 0) return u_i; // y2 <= 0, increasing on [0, u]
        return exceeds_root(u_i, q_ii, m_i) ? u_i : 0;
    }
    if (m_i > 0) return u_i;
    if (m_i < 0) return 0;
    return x_i; // f_i identically zero
}

long long best_value_constrained(long long q_ii, long long m_i, long long u_i, long long x_i,
                                 long long alpha_i) {
    long long cap = std::min(u_i, x_i + alpha_i);
    if (q_ii < 0) {
        if (m_i <= 0) return 0;
        return std::min(cap, round_to_candidate(m_i, q_ii));
    }
    if (q_ii > 0) {
        if (m_i >= 0) return cap;
        return exceeds_root(cap, q_ii, m_i) ? cap : 0;
    }
    if (m_i > 0) return cap;
    if (m_i < 0) return 0;
    return x_i;
}

} // namespace qip
