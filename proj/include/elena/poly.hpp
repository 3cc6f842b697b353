#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "elena/types.hpp"

namespace elena {

/// Dense integer polynomial, coefficients in ascending degree, no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<long long> coeffs);
    explicit Poly(std::vector<BigInt> coeffs);

    static Poly monomial(std::size_t degree, BigInt coeff = 1);

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;

    Poly derivative() const;

    bool operator==(const Poly&) const = default;

  private:
    void trim();
    std::vector<BigInt> c_;
};

/// Ratio of integer polynomials, normalized so the denominator's constant
/// term is 1. Coefficients come out of the linear recurrence the denominator
/// implies; no gcd reduction is performed.
class RationalGF {
  public:
    RationalGF() : num_(), den_({1}) {}
    RationalGF(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RationalGF operator+(const RationalGF& o) const;
    RationalGF operator-(const RationalGF& o) const;
    RationalGF operator*(const RationalGF& o) const;

    RationalGF derivative() const;

  private:
    Poly num_, den_;
};

/// Exact coefficients [z^0 .. z^N].
std::vector<BigInt> series(const RationalGF& g, std::size_t N);

} // namespace elena
