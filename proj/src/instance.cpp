#include "qip/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace qip {

namespace {

__int128 abs128(long long v) {
    __int128 w = v;
    return w < 0 ? -w : w;
}

} // namespace

Instance Instance::create(std::vector<long long> d,
                          std::vector<long long> q,
                          std::vector<long long> u,
                          std::vector<long long> a,
                          std::vector<long long> b) {
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("instance: n must be positive");
    if (u.size() != n) throw std::invalid_argument("instance: |u| != n");
    if (q.size() != n * (n + 1) / 2)
        throw std::invalid_argument("instance: Q must hold n(n+1)/2 upper-triangular entries");

    if (b.empty() != a.empty())
        throw std::invalid_argument("instance: A and b must be given together");
    const std::size_t m = b.size();
    if (a.size() != m * n) throw std::invalid_argument("instance: |A| != m*n");

    for (long long ui : u)
        if (ui < 0) throw std::invalid_argument("instance: upper bounds must be non-negative");
    for (long long bj : b)
        if (bj <= 0) throw std::invalid_argument("instance: rhs entries must be positive");
    for (long long aji : a)
        if (aji < 0) throw std::invalid_argument("instance: constraint coefficients must be non-negative");
    // a >= 0 and b > 0 make x = 0 feasible; nothing further to assert.

    // Conservative magnitude bound: sum of |coefficients| times (max u)^2 must
    // fit in 64 bits, which guarantees every quadratic-form evaluation and
    // move delta over the box is exact.
    __int128 umax = 1;
    for (long long ui : u) umax = std::max<__int128>(umax, ui);
    __int128 coef_sum = 0;
    for (long long v : d) coef_sum += abs128(v);
    for (long long v : q) coef_sum += abs128(v);
    constexpr __int128 kMax = INT64_MAX;
    if (coef_sum * umax * umax > kMax)
        throw std::overflow_error("instance: coefficient magnitudes exceed 64-bit evaluation range");
    __int128 weight_sum = 0;
    for (long long v : a) weight_sum += abs128(v);
    for (long long v : b) weight_sum += abs128(v);
    if (weight_sum * umax > kMax)
        throw std::overflow_error("instance: constraint magnitudes exceed 64-bit evaluation range");

    Instance inst;
    inst.n_ = static_cast<int>(n);
    inst.m_ = static_cast<int>(m);
    inst.d_ = std::move(d);
    inst.q_ = std::move(q);
    inst.u_ = std::move(u);
    inst.a_ = std::move(a);
    inst.b_ = std::move(b);
    return inst;
}

} // namespace qip
