#pragma once

#include <cstddef>
#include <vector>

#include "elena/types.hpp"

namespace elena {

/// Truncated two-variable power series with exact integer coefficients on a
/// rectangular grid: z-degree <= max_z, second-variable degree <= max_u.
/// Arithmetic is exact within the recorded truncation.
class BivariateSeries {
  public:
    BivariateSeries(std::size_t max_z, std::size_t max_u);

    std::size_t max_z() const { return max_z_; }
    std::size_t max_u() const { return max_u_; }

    const BigInt& at(std::size_t n, std::size_t k) const;
    void set(std::size_t n, std::size_t k, BigInt v);
    void add_at(std::size_t n, std::size_t k, const BigInt& v);

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;

    /// Substitute z <- z*u: z^n u^k maps to z^n u^{k+n}; overflowed u-degrees
    /// fall off the grid.
    BivariateSeries substitute_z_zu() const;

    /// Substitute u <- z*u: z^n u^k maps to z^{n+k} u^k.
    BivariateSeries substitute_u_zu() const;

    /// Multiplicative inverse; requires constant coefficient 1.
    BivariateSeries inverse() const;

    /// Univariate slices, as coefficient vectors indexed by z-degree.
    std::vector<BigInt> eval_u_one() const;
    std::vector<BigInt> eval_u_z() const; // u <- z, re-truncated at max_z

    bool operator==(const BivariateSeries&) const = default;

  private:
    std::size_t max_z_, max_u_;
    std::vector<std::vector<BigInt>> c_; // c_[n][k]
};

} // namespace elena
