#pragma once

#include <cstdint>
#include <stdexcept>

namespace qip {

// Deterministic 64-bit generator based on SplitMix64 (Steele, Lea, Flood 2014).
// Chosen over std::mt19937_64 + std::uniform_int_distribution because the
// standard distributions are not bit-portable across implementations; every
// draw here is fully specified, so seeded instances and runs reproduce
// byte-identically on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Independent child stream; used for per-row draws in the generator so
    // that each section of an instance depends only on (seed, stream id).
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
        child.next_u64();
        return child;
    }

    // Uniform integer in [lo, hi], inclusive, via rejection sampling.
    long long uniform_int(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next_u64()); // full 64-bit range
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    // Uniform real in [lo, hi) with 53 random mantissa bits.
    double uniform_real(double lo, double hi) {
        double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

private:
    std::uint64_t state_;
};

} // namespace qip
