#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "elena/bivariate.hpp"
#include "elena/poly.hpp"
#include "elena/types.hpp"

namespace elena {

// Closed forms. E(z) = z(1-2z)/(1-3z+z^2) counts words by size; the others
// are the u-derivatives at u=1 of the marked variants, i.e. per-size totals
// of the corresponding statistic.
RationalGF gf_count();        // E(z)
RationalGF gf_count_deriv();  // dE/dz = (1-4z+5z^2)/(1-3z+z^2)^2
RationalGF gf_root_degree();  // z^2(1-z)^2 / ((1-2z)(1-3z+z^2))
RationalGF gf_leaves();       // z(1-5z+8z^2-3z^3) / (1-3z+z^2)^2
RationalGF gf_paths();        // z^3(1-z) / (1-3z+z^2)^2
RationalGF gf_spine_nodes();  // z(1-2z)^2 / (1-3z+z^2)^2, the `a`-letter totals
RationalGF gf_descendants();  // z(1-7z+20z^2-26z^3+11z^4) / ((1-z)(1-3z+z^2)^3)
RationalGF gf_path_nodes();   // z dE/dz - spine_nodes

struct SeriesTable {
    std::string name;
    std::string description;
    RationalGF gf;
    std::vector<BigInt> coefficients; // [z^0 .. z^14]
};

std::vector<SeriesTable> catalog();

/// E_h, the series counting words of height <= h, from
/// E_h = z + z(1-z)/(1-2z+z^h) E_{h-1} with E_0 = 0.
std::vector<BigInt> eh_series(std::size_t h, std::size_t N);

/// U_h, counting words of height > h (U_0 = E). Computed both as E - E_h and
/// through the difference recursion
/// (1-2z+z^h) U_h = (1-z) z^{h+2}/(1-3z+z^2) + z(1-z) U_{h-1};
/// the two routes are asserted equal.
std::vector<BigInt> uh_series(std::size_t h, std::size_t N);

/// Coefficient n = total height over all words of size n
/// = sum over h >= 0 of [z^n] U_h.
std::vector<BigInt> height_total_series(std::size_t N);

/// Checks, exactly on the truncated grid, that
/// (1-2z) U(z,w) + U(z,zw)
///   = 2z(1-z)(1-2z)/(1-3z+z^2) + z^3 w (1-z)/((1-3z+z^2)(1-wz))
///     + wz(1-z) U(z,w)
/// where U(z,w) = sum_h U_h(z) w^h. Throws IdentityViolated with the first
/// offending coefficient.
void verify_master_equation(std::size_t Nz, std::size_t Nw);

/// The w = 1 instance: (1-3z+z^2) U(z,1) + U(z,z) = z(2-6z+5z^2)/(1-3z+z^2).
void verify_master_w1(std::size_t Nz);

/// Q(z,u) = sum_{m>=1} z^m u^{m(m+1)/2}, one term per attached chain.
BivariateSeries q_series(std::size_t Nz);

/// Checks D(z,u) = zu + zu D(zu,u)/(1 - Q(zu,u)) against the exhaustive
/// distribution, plus Q(z,1) = z/(1-z) and dQ/du|_{u=1} = z/(1-z)^3.
void verify_descendants_equation(std::size_t Nz);

inline constexpr std::size_t kDefaultSeriesBudget = 2000;

/// Exact per-word averages at one size.
struct AveragesRow {
    std::size_t n = 0;
    Rational root_degree;
    Rational leaves;
    Rational paths;
    Rational spine_nodes;
    Rational path_nodes;
    Rational descendants; // average psi
    Rational height;
};

AveragesRow averages_table(std::size_t n, std::size_t budget = kDefaultSeriesBudget);

/// One statistic's convergent against its limiting constant.
struct AsymptoticRow {
    std::string name;
    double convergent = 0;
    double constant = 0;
    double deviation = 0;
};

/// Convergents at size n: the plain average for root degree, successive
/// differences for the linear statistics, the slope ratio for nodes per path.
std::vector<AsymptoticRow> asymptotics_report(std::size_t n,
                                              std::size_t budget = kDefaultSeriesBudget);

} // namespace elena
