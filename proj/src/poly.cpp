#include "elena/poly.hpp"

namespace elena {

Poly::Poly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(std::size_t degree, BigInt coeff) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(i);
    return Poly(std::move(c));
}

RationalGF::RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    BigInt c0 = den_.coeff(0);
    if (c0 == -1) {
        num_ = -num_;
        den_ = -den_;
    } else if (c0 != 1) {
        throw Error("denominator constant term must be a unit");
    }
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator-(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return RationalGF(num_ * o.num_, den_ * o.den_);
}

RationalGF RationalGF::derivative() const {
    return RationalGF(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::vector<BigInt> series(const RationalGF& g, std::size_t N) {
    // den * c = num, solved forward: c_n = num_n - sum_{i>=1} den_i c_{n-i}.
    std::vector<BigInt> c(N + 1);
    std::size_t dd = g.den().degree();
    for (std::size_t n = 0; n <= N; ++n) {
        BigInt v = g.num().coeff(n);
        for (std::size_t i = 1; i <= std::min(dd, n); ++i)
            v -= g.den().coeff(i) * c[n - i];
        c[n] = std::move(v);
    }
    return c;
}

} // namespace elena
