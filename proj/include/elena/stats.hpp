#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "elena/bivariate.hpp"
#include "elena/types.hpp"
#include "elena/words.hpp"

namespace elena {

/// Exact totals of every statistic over all words of one size.
struct AggregateRow {
    std::size_t n = 0;
    BigInt count;
    BigInt root_degree;
    BigInt leaves;
    BigInt paths;
    BigInt spine_nodes;
    BigInt path_nodes;
    BigInt psi;
    BigInt path_length;
    BigInt height_total;
};

StatRecord tree_stats(const ElenaWord& w);

/// Sums tree_stats over the full enumeration of size n. Deterministic;
/// never sampled.
AggregateRow aggregate(std::size_t n, std::size_t limit = kDefaultWordEnumLimit);

inline constexpr std::size_t kDefaultBivariateLimit = 10;

/// Exhaustive distribution D(z,u): coefficient of z^n u^k counts words of
/// size n whose subtree-size sum is k. u-degree runs to Nz(Nz+1)/2.
BivariateSeries brute_D(std::size_t Nz, std::size_t limit = kDefaultBivariateLimit);

inline constexpr const char* kAggregateCsvHeader =
    "n,count,root_degree,leaves,paths,spine_nodes,path_nodes,psi,path_length,height_total";

std::string aggregate_csv_row(const AggregateRow& r);
std::string aggregate_json(const AggregateRow& r);

} // namespace elena
