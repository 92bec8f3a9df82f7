#include "qip/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace qip {

namespace {

struct FamilyRanges {
    long long quad_abs;  // off-diagonal and diagonal in [-quad_abs, quad_abs]
    long long d_hi;      // d in [1, d_hi]
    long long u_hi;      // u in [1, u_hi]
    long long a_hi;      // a in [0, a_hi]
};

FamilyRanges ranges_for(int family) {
    switch (family) {
        case 1: return {20, 20, 10, 9};
        case 2: return {40, 40, 20, 19};
        case 3: return {80, 80, 40, 39};
        case 4: return {160, 60, 80, 79};
        case 5: return {200, 200, 100, 99};
        default: throw std::invalid_argument("generator: family must be 1..5");
    }
}

std::pair<double, double> bracket_for(Tightness t) {
    switch (t) {
        case Tightness::e: return {0.6, 0.8};
        case Tightness::d: return {0.4, 0.6};
        case Tightness::h: return {0.2, 0.4};
    }
    throw std::invalid_argument("generator: bad tightness");
}

} // namespace

char tightness_letter(Tightness t) {
    switch (t) {
        case Tightness::e: return 'e';
        case Tightness::d: return 'd';
        case Tightness::h: return 'h';
    }
    throw std::invalid_argument("generator: bad tightness");
}

Tightness tightness_from_letter(char c) {
    switch (c) {
        case 'e': return Tightness::e;
        case 'd': return Tightness::d;
        case 'h': return Tightness::h;
        default: throw std::invalid_argument("generator: tightness must be e, d, or h");
    }
}

std::vector<long long> derive_rhs(std::span<const long long> a, int m, int n,
                                  std::span<const long long> u, Tightness tightness, Rng& rng,
                                  RhsBasis basis) {
    auto [lo, hi] = bracket_for(tightness);
    std::vector<long long> b(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) {
            long long w = a[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(i)];
            s += basis == RhsBasis::max_consumption ? w * u[static_cast<std::size_t>(i)] : w;
        }
        double r = rng.uniform_real(lo, hi);
        b[static_cast<std::size_t>(j)] =
            std::max(1LL, static_cast<long long>(std::llround(r * static_cast<double>(s))));
    }
    return b;
}

std::string instance_name(const GeneratorConfig& config) {
    std::string name = "n" + std::to_string(config.n);
    if (config.constrained) {
        int m = static_cast<int>(std::llround(config.c * config.n));
        name += "m" + std::to_string(m) + tightness_letter(config.tightness);
    }
    name += "-" + std::to_string(config.family);
    return name;
}

Instance generate(const GeneratorConfig& config) {
    if (config.n < 1) throw std::invalid_argument("generator: n must be positive");
    const FamilyRanges r = ranges_for(config.family);
    const int n = config.n;
    int m = 0;
    if (config.constrained) {
        if (config.c <= 0.0 || config.c > 1.0)
            throw std::invalid_argument("generator: constraint ratio must be in (0, 1]");
        m = static_cast<int>(std::llround(config.c * n));
        if (m < 1) throw std::invalid_argument("generator: constraint ratio yields m = 0");
    }

    // Per-section streams: 0 -> u, 1 -> d, 2+i -> Q row i, 2+n+j -> A row j,
    // 2+n+m -> rhs ratios.
    Rng root(config.seed);

    std::vector<long long> u(static_cast<std::size_t>(n));
    {
        Rng s = root.split(0);
        for (auto& v : u) v = s.uniform_int(1, r.u_hi);
    }
    std::vector<long long> d(static_cast<std::size_t>(n));
    {
        Rng s = root.split(1);
        for (auto& v : d) v = s.uniform_int(1, r.d_hi);
    }
    std::vector<long long> q;
    q.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i) {
        Rng s = root.split(2 + static_cast<std::uint64_t>(i));
        for (int j = i; j < n; ++j) q.push_back(s.uniform_int(-r.quad_abs, r.quad_abs));
    }

    std::vector<long long> a;
    std::vector<long long> b;
    if (config.constrained) {
        a.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
        for (int j = 0; j < m; ++j) {
            Rng s = root.split(2 + static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(j));
            for (int i = 0; i < n; ++i) a.push_back(s.uniform_int(0, r.a_hi));
        }
        Rng s = root.split(2 + static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(m));
        b = derive_rhs(a, m, n, u, config.tightness, s, config.rhs_basis);
    }

    return Instance::create(std::move(d), std::move(q), std::move(u), std::move(a), std::move(b));
}

} // namespace qip
