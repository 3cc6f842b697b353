#include "elena/genfunc.hpp"

#include <cmath>
#include <sstream>

#include "elena/stats.hpp"

namespace elena {

namespace {

const Poly kQ{1, -3, 1}; // 1 - 3z + z^2

Poly q_pow(int e) {
    Poly r{1};
    for (int i = 0; i < e; ++i) r = r * kQ;
    return r;
}

[[noreturn]] void violated(const std::string& where, std::size_t n, std::size_t k,
                           const BigInt& lhs, const BigInt& rhs) {
    std::ostringstream msg;
    msg << where << ": first offending coefficient at z^" << n << " (second degree "
        << k << "): lhs " << lhs << " != rhs " << rhs;
    throw IdentityViolated(msg.str());
}

} // namespace

RationalGF gf_count() { return RationalGF(Poly{0, 1, -2}, kQ); }

RationalGF gf_count_deriv() { return RationalGF(Poly{1, -4, 5}, q_pow(2)); }

RationalGF gf_root_degree() {
    return RationalGF(Poly{0, 0, 1, -2, 1}, Poly{1, -2} * kQ);
}

RationalGF gf_leaves() { return RationalGF(Poly{0, 1, -5, 8, -3}, q_pow(2)); }

RationalGF gf_paths() { return RationalGF(Poly{0, 0, 0, 1, -1}, q_pow(2)); }

RationalGF gf_spine_nodes() { return RationalGF(Poly{0, 1, -4, 4}, q_pow(2)); }

RationalGF gf_descendants() {
    return RationalGF(Poly{0, 1, -7, 20, -26, 11}, Poly{1, -1} * q_pow(3));
}

RationalGF gf_path_nodes() {
    // z dE/dz gives n * e_n, the total node count; spine nodes are the rest.
    RationalGF z_dE(Poly{0, 1, -4, 5}, q_pow(2));
    return z_dE - gf_spine_nodes();
}

std::vector<SeriesTable> catalog() {
    constexpr std::size_t kOrder = 14;
    std::vector<SeriesTable> out;
    auto add = [&](std::string name, std::string desc, RationalGF gf) {
        std::vector<BigInt> c = series(gf, kOrder);
        out.push_back({std::move(name), std::move(desc), std::move(gf), std::move(c)});
    };
    add("count", "number of Elenas of size n", gf_count());
    add("count_deriv", "derivative series, (n+1) times the count at n+1", gf_count_deriv());
    add("root_degree", "total root degree over Elenas of size n", gf_root_degree());
    add("leaves", "total leaf count", gf_leaves());
    add("paths", "total number of attached paths", gf_paths());
    add("spine_nodes", "total nodes on rightmost branches", gf_spine_nodes());
    add("path_nodes", "total nodes inside attached paths", gf_path_nodes());
    add("descendants", "total subtree-size sum (equals total path length)",
        gf_descendants());
    return out;
}

namespace {

RationalGF eh_gf(std::size_t h) {
    RationalGF e; // E_0 = 0
    const RationalGF z(Poly{0, 1}, Poly{1});
    for (std::size_t i = 1; i <= h; ++i) {
        Poly den = Poly{1, -2} + Poly::monomial(i);
        e = z + RationalGF(Poly{0, 1, -1}, den) * e;
    }
    return e;
}

// One step of the difference recursion (1-2z+z^h) U_h = (1-z) z^{h+2}/q + z(1-z) U_{h-1},
// solved coefficientwise. `s` is the series of (1-z)/q.
std::vector<BigInt> uh_step(const std::vector<BigInt>& prev, std::size_t h,
                            const std::vector<BigInt>& s, std::size_t N) {
    std::vector<BigInt> u(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        BigInt v;
        if (n >= h + 2) v = s[n - h - 2];
        v += prev[n - 1];
        if (n >= 2) v -= prev[n - 2];
        v += 2 * u[n - 1];
        if (n >= h) v -= u[n - h];
        u[n] = std::move(v);
    }
    return u;
}

// Applies f(h, U_h) for h = 0..H, with every series to order N.
template <class F>
void for_each_uh(std::size_t H, std::size_t N, F&& f) {
    std::vector<BigInt> s = series(RationalGF(Poly{1, -1}, kQ), N);
    std::vector<BigInt> u = series(gf_count(), N); // U_0 = E
    f(std::size_t{0}, u);
    for (std::size_t h = 1; h <= H; ++h) {
        u = uh_step(u, h, s, N);
        f(h, u);
    }
}

} // namespace

std::vector<BigInt> eh_series(std::size_t h, std::size_t N) {
    return series(eh_gf(h), N);
}

std::vector<BigInt> uh_series(std::size_t h, std::size_t N) {
    std::vector<BigInt> viaDifference;
    for_each_uh(h, N, [&](std::size_t i, const std::vector<BigInt>& u) {
        if (i == h) viaDifference = u;
    });

    std::vector<BigInt> e = series(gf_count(), N);
    std::vector<BigInt> eh = eh_series(h, N);
    for (std::size_t n = 0; n <= N; ++n) {
        BigInt direct = e[n] - eh[n];
        if (direct != viaDifference[n])
            violated("uh_series two-route check (h=" + std::to_string(h) + ")", n, 0,
                     direct, viaDifference[n]);
    }
    return viaDifference;
}

std::vector<BigInt> height_total_series(std::size_t N) {
    std::vector<BigInt> total(N + 1);
    if (N == 0) return total;
    // U_h vanishes to order N once h >= N (its lowest term is z^{h+1}).
    for_each_uh(N - 1, N, [&](std::size_t, const std::vector<BigInt>& u) {
        for (std::size_t n = 0; n <= N; ++n) total[n] += u[n];
    });
    return total;
}

namespace {

BivariateSeries from_z_series(const std::vector<BigInt>& s, std::size_t Nz,
                              std::size_t Nu) {
    BivariateSeries r(Nz, Nu);
    for (std::size_t n = 0; n <= Nz && n < s.size(); ++n) r.set(n, 0, s[n]);
    return r;
}

} // namespace

void verify_master_equation(std::size_t Nz, std::size_t Nw) {
    BivariateSeries U(Nz, Nw);
    for_each_uh(Nw, Nz, [&](std::size_t h, const std::vector<BigInt>& u) {
        for (std::size_t n = 0; n <= Nz; ++n) U.set(n, h, u[n]);
    });

    BivariateSeries oneMinus2z(Nz, Nw);
    oneMinus2z.set(0, 0, 1);
    oneMinus2z.set(1, 0, -2);
    BivariateSeries lhs = oneMinus2z * U + U.substitute_u_zu();

    // 2z(1-z)(1-2z)/q, pure in z
    BivariateSeries t1 =
        from_z_series(series(RationalGF(Poly{0, 2} * Poly{1, -1} * Poly{1, -2}, kQ), Nz),
                      Nz, Nw);
    // z^3 w (1-z) / (q (1-wz)): the w^h slice is z^{h-1} times z^3(1-z)/q
    std::vector<BigInt> s2 = series(RationalGF(Poly{0, 0, 0, 1, -1}, kQ), Nz);
    BivariateSeries t2(Nz, Nw);
    for (std::size_t h = 1; h <= Nw; ++h)
        for (std::size_t n = h - 1; n <= Nz; ++n) t2.set(n, h, s2[n - h + 1]);
    // wz(1-z) U(z,w)
    BivariateSeries wz1mz(Nz, Nw);
    wz1mz.set(1, 1, 1);
    wz1mz.set(2, 1, -1);
    BivariateSeries rhs = t1 + t2 + wz1mz * U;

    for (std::size_t n = 0; n <= Nz; ++n)
        for (std::size_t h = 0; h <= Nw; ++h)
            if (lhs.at(n, h) != rhs.at(n, h))
                violated("master equation", n, h, lhs.at(n, h), rhs.at(n, h));
}

void verify_master_w1(std::size_t Nz) {
    std::vector<BigInt> u1(Nz + 1); // U(z,1)
    std::vector<BigInt> uz(Nz + 1); // U(z,z)
    if (Nz > 0)
        for_each_uh(Nz - 1, Nz, [&](std::size_t h, const std::vector<BigInt>& u) {
            for (std::size_t n = 0; n <= Nz; ++n) {
                u1[n] += u[n];
                if (n + h <= Nz) uz[n + h] += u[n];
            }
        });

    std::vector<BigInt> rhs = series(RationalGF(Poly{0, 2, -6, 5}, kQ), Nz);
    for (std::size_t n = 0; n <= Nz; ++n) {
        BigInt lhs = u1[n] + uz[n];
        if (n >= 1) lhs -= 3 * u1[n - 1];
        if (n >= 2) lhs += u1[n - 2];
        if (lhs != rhs[n]) violated("master equation at w=1", n, 0, lhs, rhs[n]);
    }
}

BivariateSeries q_series(std::size_t Nz) {
    BivariateSeries q(Nz, Nz * (Nz + 1) / 2);
    for (std::size_t m = 1; m <= Nz; ++m) q.set(m, m * (m + 1) / 2, 1);
    return q;
}

void verify_descendants_equation(std::size_t Nz) {
    // Headroom for the z <- zu substitution, which adds n to the u-degree.
    const std::size_t Nu = Nz * (Nz + 1) / 2 + Nz;

    BivariateSeries q(Nz, Nu);
    for (std::size_t m = 1; m <= Nz; ++m) q.set(m, m * (m + 1) / 2, 1);

    // Q(z,1) = z/(1-z) and dQ/du at u=1 = z/(1-z)^3.
    std::vector<BigInt> q1 = series(RationalGF(Poly{0, 1}, Poly{1, -1}), Nz);
    std::vector<BigInt> qu =
        series(RationalGF(Poly{0, 1}, Poly{1, -1} * Poly{1, -1} * Poly{1, -1}), Nz);
    for (std::size_t n = 0; n <= Nz; ++n) {
        BigInt sum = 0, weighted = 0;
        for (std::size_t k = 0; k <= Nu; ++k) {
            sum += q.at(n, k);
            weighted += BigInt(k) * q.at(n, k);
        }
        if (sum != q1[n]) violated("Q(z,1)", n, 0, sum, q1[n]);
        if (weighted != qu[n]) violated("dQ/du at u=1", n, 0, weighted, qu[n]);
    }

    BivariateSeries narrow = brute_D(Nz);
    BivariateSeries d(Nz, Nu);
    for (std::size_t n = 0; n <= Nz; ++n)
        for (std::size_t k = 0; k <= narrow.max_u(); ++k)
            if (narrow.at(n, k) != 0) d.set(n, k, narrow.at(n, k));

    BivariateSeries zu(Nz, Nu);
    zu.set(1, 1, 1);
    BivariateSeries one(Nz, Nu);
    one.set(0, 0, 1);

    BivariateSeries rhs =
        zu + zu * d.substitute_z_zu() * (one - q.substitute_z_zu()).inverse();

    for (std::size_t n = 0; n <= Nz; ++n)
        for (std::size_t k = 0; k <= Nu; ++k)
            if (d.at(n, k) != rhs.at(n, k))
                violated("descendants equation", n, k, d.at(n, k), rhs.at(n, k));
}

namespace {

struct Totals {
    std::vector<BigInt> count, root_degree, leaves, paths, spine, path_nodes, psi,
        height;
};

Totals all_totals(std::size_t n, std::size_t budget) {
    if (n > budget)
        throw BudgetExceeded("series order " + std::to_string(n) + " exceeds budget " +
                             std::to_string(budget));
    Totals t;
    t.count = series(gf_count(), n);
    t.root_degree = series(gf_root_degree(), n);
    t.leaves = series(gf_leaves(), n);
    t.paths = series(gf_paths(), n);
    t.spine = series(gf_spine_nodes(), n);
    t.path_nodes = series(gf_path_nodes(), n);
    t.psi = series(gf_descendants(), n);
    t.height = height_total_series(n);
    return t;
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

} // namespace

AveragesRow averages_table(std::size_t n, std::size_t budget) {
    if (n == 0) throw Error("size must be >= 1");
    Totals t = all_totals(n, budget);
    AveragesRow row;
    row.n = n;
    const BigInt& c = t.count[n];
    row.root_degree = ratio(t.root_degree[n], c);
    row.leaves = ratio(t.leaves[n], c);
    row.paths = ratio(t.paths[n], c);
    row.spine_nodes = ratio(t.spine[n], c);
    row.path_nodes = ratio(t.path_nodes[n], c);
    row.descendants = ratio(t.psi[n], c);
    row.height = ratio(t.height[n], c);
    return row;
}

std::vector<AsymptoticRow> asymptotics_report(std::size_t n, std::size_t budget) {
    if (n < 3) throw Error("need size >= 3 for the difference convergents");
    Totals t = all_totals(n, budget);

    auto avg = [&](const std::vector<BigInt>& tot, std::size_t i) {
        return ratio(tot[i], t.count[i]);
    };
    auto diff = [&](const std::vector<BigInt>& tot) {
        return avg(tot, n) - avg(tot, n - 1);
    };
    auto to_d = [](const Rational& r) { return r.convert_to<double>(); };

    const double s5 = std::sqrt(5.0);
    std::vector<AsymptoticRow> rows;
    auto add = [&](std::string name, double conv, double constant) {
        rows.push_back({std::move(name), conv, constant, std::abs(conv - constant)});
    };

    add("root_degree", to_d(avg(t.root_degree, n)), (3 + s5) / 2);
    add("leaves", to_d(diff(t.leaves)), 1 / s5);
    add("paths", to_d(diff(t.paths)), 1 / s5);
    add("spine_nodes", to_d(diff(t.spine)), (5 - s5) / 10);
    add("path_nodes", to_d(diff(t.path_nodes)), (5 + s5) / 10);
    add("nodes_per_path", to_d(diff(t.path_nodes) / diff(t.paths)), (1 + s5) / 2);
    // The per-tree psi average is quadratic in n up to geometrically small
    // corrections, so half its second difference isolates the leading
    // coefficient, which is the per-node descendants constant.
    Rational second =
        (avg(t.psi, n) - 2 * avg(t.psi, n - 1) + avg(t.psi, n - 2)) / 2;
    add("descendants", to_d(second), (5 - s5) / 20);
    add("height", to_d(diff(t.height)), (5 - s5) / 10);
    return rows;
}

} // namespace elena
