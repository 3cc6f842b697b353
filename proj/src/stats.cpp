#include "elena/stats.hpp"

#include <sstream>

namespace elena {

namespace {

struct DfsTotals {
    long long leaves = 0;
    std::size_t height = 0;
    BigInt psi;
    BigInt path_length;
};

// Returns subtree size; accumulates every statistic in one pass.
std::size_t dfs(const PlantedPlaneTree& t, std::size_t depth, DfsTotals& tot) {
    std::size_t sz = 1;
    for (const auto& c : t.children) sz += dfs(c, depth + 1, tot);
    if (t.children.empty()) ++tot.leaves;
    tot.height = std::max(tot.height, depth);
    tot.psi += sz;
    tot.path_length += depth;
    return sz;
}

} // namespace

StatRecord tree_stats(const ElenaWord& w) {
    PlantedPlaneTree t = word_to_tree(w);
    DfsTotals tot;
    dfs(t, 1, tot);

    StatRecord r;
    r.root_degree = static_cast<long long>(t.children.size());
    r.leaves = tot.leaves;
    r.height = static_cast<long long>(tot.height);
    r.psi = tot.psi;
    r.path_length = tot.path_length;
    r.spine_nodes = static_cast<long long>(w.blocks.size()) + 1;
    for (const auto& b : w.blocks) {
        r.paths += static_cast<long long>(b.size());
        for (int m : b) r.path_nodes += m;
    }
    return r;
}

AggregateRow aggregate(std::size_t n, std::size_t limit) {
    AggregateRow row;
    row.n = n;
    for (const ElenaWord& w : enumerate_elenas(n, limit)) {
        StatRecord s = tree_stats(w);
        row.count += 1;
        row.root_degree += s.root_degree;
        row.leaves += s.leaves;
        row.paths += s.paths;
        row.spine_nodes += s.spine_nodes;
        row.path_nodes += s.path_nodes;
        row.psi += s.psi;
        row.path_length += s.path_length;
        row.height_total += s.height;
    }
    return row;
}

BivariateSeries brute_D(std::size_t Nz, std::size_t limit) {
    if (Nz > limit)
        throw LimitExceeded("brute_D: Nz = " + std::to_string(Nz) +
                            " exceeds limit " + std::to_string(limit));
    BivariateSeries d(Nz, Nz * (Nz + 1) / 2);
    for (std::size_t n = 1; n <= Nz; ++n)
        for (const ElenaWord& w : enumerate_elenas(n)) {
            StatRecord s = tree_stats(w);
            d.add_at(n, static_cast<std::size_t>(s.psi), 1);
        }
    return d;
}

std::string aggregate_csv_row(const AggregateRow& r) {
    std::ostringstream out;
    out << r.n << ',' << r.count << ',' << r.root_degree << ',' << r.leaves << ','
        << r.paths << ',' << r.spine_nodes << ',' << r.path_nodes << ',' << r.psi
        << ',' << r.path_length << ',' << r.height_total;
    return out.str();
}

std::string aggregate_json(const AggregateRow& r) {
    std::ostringstream out;
    out << "{\"n\":" << r.n << ",\"count\":" << r.count
        << ",\"root_degree\":" << r.root_degree << ",\"leaves\":" << r.leaves
        << ",\"paths\":" << r.paths << ",\"spine_nodes\":" << r.spine_nodes
        << ",\"path_nodes\":" << r.path_nodes << ",\"psi\":" << r.psi
        << ",\"path_length\":" << r.path_length
        << ",\"height_total\":" << r.height_total << "}";
    return out.str();
}

} // namespace elena
