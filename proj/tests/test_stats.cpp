#include <doctest.h>

#include "elena/codec.hpp"
#include "elena/stats.hpp"

using namespace elena;

TEST_CASE("tree_stats on the worked examples") {
    StatRecord s = tree_stats(parse_elena_word("a"));
    CHECK(s.root_degree == 0);
    CHECK(s.leaves == 1);
    CHECK(s.psi == 1);
    CHECK(s.path_length == 1);
    CHECK(s.height == 1);
    CHECK(s.paths == 0);
    CHECK(s.spine_nodes == 1);
    CHECK(s.path_nodes == 0);

    s = tree_stats(parse_elena_word("a p1 p1 a"));
    CHECK(s.root_degree == 3);
    CHECK(s.leaves == 3);
    CHECK(s.psi == 7);
    CHECK(s.path_length == 7);
    CHECK(s.height == 2);
    CHECK(s.paths == 2);
    CHECK(s.spine_nodes == 2);
    CHECK(s.path_nodes == 2);

    s = tree_stats(parse_elena_word("a a a a"));
    CHECK(s.root_degree == 1);
    CHECK(s.leaves == 1);
    CHECK(s.psi == 10);
    CHECK(s.height == 4);
    CHECK(s.spine_nodes == 4);
}

TEST_CASE("aggregates over small sizes") {
    AggregateRow r = aggregate(1);
    CHECK(r.count == 1);
    CHECK(r.leaves == 1);
    CHECK(r.psi == 1);
    CHECK(r.height_total == 1);

    r = aggregate(3);
    CHECK(r.count == 2);
    CHECK(r.root_degree == 3);
    CHECK(r.leaves == 3);
    CHECK(r.paths == 1);
    CHECK(r.spine_nodes == 5);
    CHECK(r.psi == 11);
    CHECK(r.height_total == 5);

    r = aggregate(4);
    CHECK(r.count == 5);
    CHECK(r.root_degree == 9);
    CHECK(r.leaves == 10);
    CHECK(r.paths == 5);
    CHECK(r.spine_nodes == 14);
    CHECK(r.psi == 42);
    CHECK(r.path_length == 42);
    CHECK(r.height_total == 15);
}

TEST_CASE("per-word structural identities") {
    for (std::size_t n = 1; n <= 10; ++n) {
        AggregateRow r = aggregate(n);
        CHECK(r.psi == r.path_length);
        CHECK(r.spine_nodes + r.path_nodes == BigInt(n) * r.count);
        CHECK(r.leaves == r.paths + r.count); // each path ends in a leaf, plus the top
    }
}

TEST_CASE("exhaustive psi distribution") {
    BivariateSeries d = brute_D(6);
    CHECK(d.at(1, 1) == 1);
    CHECK(d.at(3, 5) == 1); // one word of size 3 with psi 5
    CHECK(d.at(3, 6) == 1); // and one with psi 6
    for (std::size_t k = 0; k <= d.max_u(); ++k)
        if (k != 5 && k != 6) CHECK(d.at(3, k) == 0);

    const long long counts[] = {0, 1, 1, 2, 5, 13, 34};
    for (std::size_t n = 1; n <= 6; ++n) {
        BigInt sum = 0;
        for (std::size_t k = 0; k <= d.max_u(); ++k) sum += d.at(n, k);
        CHECK(sum == counts[n]);
    }
    CHECK_THROWS_AS(brute_D(11), LimitExceeded);
}

TEST_CASE("row rendering") {
    AggregateRow r = aggregate(4);
    CHECK(std::string(kAggregateCsvHeader) ==
          "n,count,root_degree,leaves,paths,spine_nodes,path_nodes,psi,path_length,"
          "height_total");
    CHECK(aggregate_csv_row(r) == "4,5,9,10,5,14,6,42,42,15");
    CHECK(aggregate_json(r) ==
          "{\"n\":4,\"count\":5,\"root_degree\":9,\"leaves\":10,\"paths\":5,"
          "\"spine_nodes\":14,\"path_nodes\":6,\"psi\":42,\"path_length\":42,"
          "\"height_total\":15}");
}
