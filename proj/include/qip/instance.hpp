#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qip {

/// Immutable problem data for maximize d.x + x.Q.x over the integer box
/// [0, u], optionally subject to knapsack constraints A.x <= b.
///
/// Q is upper triangular and stored packed: row i holds q(i,i) .. q(i,n-1).
/// A is row major, m x n. All coefficients are 64-bit signed integers;
/// construction rejects data whose worst-case objective magnitude could
/// overflow 64-bit arithmetic, so all downstream delta accounting is exact.
class Instance {
public:
    static Instance create(std::vector<long long> d,
                           std::vector<long long> q,
                           std::vector<long long> u,
                           std::vector<long long> a = {},
                           std::vector<long long> b = {});

    int n() const { return n_; }
    int m() const { return m_; }
    bool constrained() const { return m_ > 0; }

    long long linear(int i) const { return d_[static_cast<std::size_t>(i)]; }
    long long upper(int i) const { return u_[static_cast<std::size_t>(i)]; }
    long long rhs(int j) const { return b_[static_cast<std::size_t>(j)]; }

    /// q(i,j) for i <= j.
    long long quad(int i, int j) const {
        return q_[row_offset(i) + static_cast<std::size_t>(j - i)];
    }
    /// Packed row i: entries q(i,i) .. q(i,n-1).
    std::span<const long long> quad_row(int i) const {
        return {q_.data() + row_offset(i), static_cast<std::size_t>(n_ - i)};
    }

    long long weight(int j, int i) const {
        return a_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(i)];
    }
    std::span<const long long> weight_row(int j) const {
        return {a_.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(n_),
                static_cast<std::size_t>(n_)};
    }

    std::span<const long long> linear_terms() const { return d_; }
    std::span<const long long> uppers() const { return u_; }
    std::span<const long long> rhs_terms() const { return b_; }

private:
    Instance() = default;

    std::size_t row_offset(int i) const {
        auto k = static_cast<std::size_t>(i);
        auto nn = static_cast<std::size_t>(n_);
        return k * nn - k * (k - 1) / 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<long long> d_;
    std::vector<long long> q_; // packed upper-triangular rows
    std::vector<long long> u_;
    std::vector<long long> a_; // row major, m x n
    std::vector<long long> b_;
};

} // namespace qip
