#include "elena/bivariate.hpp"

namespace elena {

BivariateSeries::BivariateSeries(std::size_t max_z, std::size_t max_u)
    : max_z_(max_z), max_u_(max_u),
      c_(max_z + 1, std::vector<BigInt>(max_u + 1)) {}

const BigInt& BivariateSeries::at(std::size_t n, std::size_t k) const {
    return c_[n][k];
}

void BivariateSeries::set(std::size_t n, std::size_t k, BigInt v) {
    c_[n][k] = std::move(v);
}

void BivariateSeries::add_at(std::size_t n, std::size_t k, const BigInt& v) {
    c_[n][k] += v;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    BivariateSeries r(max_z_, max_u_);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k)
            r.c_[n][k] = c_[n][k] + o.c_[n][k];
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    BivariateSeries r(max_z_, max_u_);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k)
            r.c_[n][k] = c_[n][k] - o.c_[n][k];
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    BivariateSeries r(max_z_, max_u_);
    for (std::size_t n1 = 0; n1 <= max_z_; ++n1)
        for (std::size_t k1 = 0; k1 <= max_u_; ++k1) {
            if (c_[n1][k1] == 0) continue;
            for (std::size_t n2 = 0; n1 + n2 <= max_z_; ++n2)
                for (std::size_t k2 = 0; k1 + k2 <= max_u_; ++k2) {
                    if (o.c_[n2][k2] == 0) continue;
                    r.c_[n1 + n2][k1 + k2] += c_[n1][k1] * o.c_[n2][k2];
                }
        }
    return r;
}

BivariateSeries BivariateSeries::substitute_z_zu() const {
    BivariateSeries r(max_z_, max_u_);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k)
            if (c_[n][k] != 0 && k + n <= max_u_) r.c_[n][k + n] = c_[n][k];
    return r;
}

BivariateSeries BivariateSeries::substitute_u_zu() const {
    BivariateSeries r(max_z_, max_u_);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k)
            if (c_[n][k] != 0 && n + k <= max_z_) r.c_[n + k][k] = c_[n][k];
    return r;
}

BivariateSeries BivariateSeries::inverse() const {
    if (c_[0][0] != 1) throw Error("inverse requires constant coefficient 1");
    // Newton-free direct solve: r * this = 1, coefficient by coefficient in
    // graded lex over (n, k).
    BivariateSeries r(max_z_, max_u_);
    r.c_[0][0] = 1;
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k) {
            if (n == 0 && k == 0) continue;
            BigInt acc = 0;
            for (std::size_t n1 = 0; n1 <= n; ++n1)
                for (std::size_t k1 = 0; k1 <= k; ++k1) {
                    if (n1 == n && k1 == k) continue;
                    if (r.c_[n1][k1] == 0) continue;
                    acc += r.c_[n1][k1] * c_[n - n1][k - k1];
                }
            r.c_[n][k] = -acc; // since c_[0][0] == 1
        }
    return r;
}

std::vector<BigInt> BivariateSeries::eval_u_one() const {
    std::vector<BigInt> out(max_z_ + 1);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k) out[n] += c_[n][k];
    return out;
}

std::vector<BigInt> BivariateSeries::eval_u_z() const {
    std::vector<BigInt> out(max_z_ + 1);
    for (std::size_t n = 0; n <= max_z_; ++n)
        for (std::size_t k = 0; k <= max_u_; ++k)
            if (n + k <= max_z_) out[n + k] += c_[n][k];
    return out;
}

} // namespace elena
