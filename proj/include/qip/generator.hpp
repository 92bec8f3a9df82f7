#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qip/instance.hpp"
#include "qip/rng.hpp"

namespace qip {

/// Right-hand-side tightness bracket for generated constraints:
/// e = (0.6, 0.8), d = (0.4, 0.6), h = (0.2, 0.4). Tighter brackets make
/// harder instances.
enum class Tightness { e, d, h };

/// Basis the tightness ratio is applied to: the row's maximum consumption
/// sum_i a(j,i) u_i (default), or the bare coefficient sum sum_i a(j,i).
enum class RhsBasis { max_consumption, coefficient_sum };

struct GeneratorConfig {
    int family = 1; // 1..5, selects the coefficient-range column below
    int n = 0;
    bool constrained = false;
    double c = 0.2; // constraint ratio, m = round(c * n); 0.2 or 0.5
    Tightness tightness = Tightness::e;
    std::uint64_t seed = 0;
    RhsBasis rhs_basis = RhsBasis::max_consumption;
};

/// Coefficient ranges per family (inclusive):
///   family           1        2        3        4        5
///   off-diag q   (-20,20) (-40,40) (-80,80) (-160,160) (-200,200)
///   diagonal q   (-20,20) (-40,40) (-80,80) (-160,160) (-200,200)
///   linear d      (1,20)   (1,40)   (1,80)   (1,60)    (1,200)
///   upper u       (1,10)   (1,20)   (1,40)   (1,80)    (1,100)
///   weights a     (0,9)    (0,19)   (0,39)   (0,79)    (0,99)
/// Draws are independent uniform integers from split per-section streams, so
/// (config, seed) fully determines the instance.
Instance generate(const GeneratorConfig& config);

/// b_j = max(1, round(r_j * S_j)) with r_j uniform in the bracket and S_j per
/// the basis; an all-zero row degenerates to b_j = 1 (vacuous constraint).
std::vector<long long> derive_rhs(std::span<const long long> a, int m, int n,
                                  std::span<const long long> u, Tightness tightness, Rng& rng,
                                  RhsBasis basis);

/// n{a}-{p} for unconstrained, n{a}m{b}{g}-{p} for constrained,
/// e.g. n1000-3 or n1000m200e-3.
std::string instance_name(const GeneratorConfig& config);

char tightness_letter(Tightness t);
Tightness tightness_from_letter(char c);

} // namespace qip
