#include <doctest.h>

#include <set>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"
#include "elena/words.hpp"

using namespace elena;

TEST_CASE("altitude profile") {
    CHECK(altitude_profile(parse_dyck("UDUUDUUDUDDD")) ==
          std::vector<int>{1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 0});
    CHECK(altitude_profile(DyckPath{}).empty());
    CHECK(altitude_profile(parse_dyck("UUDD")) == std::vector<int>{1, 2, 1, 0});
}

TEST_CASE("valleys and the nondecreasing test") {
    CHECK(valleys(parse_dyck("UDUUDUUDUDDD")) == std::vector<int>{0, 1, 2});
    CHECK(valleys(parse_dyck("UUDD")).empty());
    CHECK(valleys(parse_dyck("UUDUDDUD")) == std::vector<int>{1, 0});

    CHECK(is_nondecreasing(parse_dyck("UDUUDUUDUDDD")));
    CHECK(is_nondecreasing(DyckPath{}));
    CHECK_FALSE(is_nondecreasing(parse_dyck("UUDUDDUD")));
}

TEST_CASE("glove bijection on the worked instances") {
    CHECK(dyck_to_tree(DyckPath{}).size() == 1);
    CHECK(render_tree(dyck_to_tree(parse_dyck("UD"))) == "(())");
    CHECK(render_tree(dyck_to_tree(parse_dyck("UDUUDUUDUDDD"))) ==
          "(()(()(()())))");

    CHECK(render_dyck(tree_to_dyck(parse_tree("()"))).empty());
    CHECK(render_dyck(tree_to_dyck(parse_tree("((()))"))) == "UUDD");
    CHECK(render_dyck(tree_to_dyck(parse_tree("(()(()(()())))"))) ==
          "UDUUDUUDUDDD");
}

TEST_CASE("glove bijection round trips exhaustively") {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const DyckPath& p : enumerate_dyck_paths(n)) {
            PlantedPlaneTree t = dyck_to_tree(p);
            CHECK(t.size() == n + 1);
            CHECK(tree_to_dyck(t) == p);
            CHECK(dyck_to_tree(tree_to_dyck(t)) == t);
        }
}

TEST_CASE("path enumeration is complete, distinct, and ordered") {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::size_t n = 0; n <= 10; ++n) {
        std::vector<DyckPath> all = enumerate_dyck_paths(n);
        CHECK(static_cast<long long>(all.size()) == catalan[n]);
        std::set<std::string> seen;
        for (const DyckPath& p : all) {
            CHECK(p.length() == 2 * n);
            CHECK(seen.insert(render_dyck(p)).second);
        }
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(all[i - 1] < all[i]); // step order, Up before Down
    }
    CHECK_THROWS_AS(enumerate_dyck_paths(13), LimitExceeded);
}

TEST_CASE("nondecreasing filter matches the word counts") {
    for (std::size_t n = 0; n <= 8; ++n) {
        std::size_t cnt = 0;
        for (const DyckPath& p : enumerate_dyck_paths(n))
            if (is_nondecreasing(p)) ++cnt;
        CHECK(BigInt(cnt) == count_elenas(n + 1));
    }
    // at n=4 exactly one of the 14 paths is excluded
    std::size_t bad = 0;
    for (const DyckPath& p : enumerate_dyck_paths(4))
        if (!is_nondecreasing(p)) ++bad;
    CHECK(bad == 1);
}
