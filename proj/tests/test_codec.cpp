#include <doctest.h>

#include <random>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"
#include "elena/words.hpp"

using namespace elena;

TEST_CASE("parse_dyck accepts both alphabets and validates balance") {
    CHECK(parse_dyck("UDUUDUUDUDDD").length() == 12);
    CHECK(parse_dyck("").empty());
    CHECK(parse_dyck("(())") == parse_dyck("UUDD"));
    CHECK_THROWS_AS(parse_dyck("UDD"), NonBalanced);
    CHECK_THROWS_AS(parse_dyck("UU"), NonBalanced);
    CHECK_THROWS_AS(parse_dyck("U(UD)D"), BadAlphabet);
    CHECK_THROWS_AS(parse_dyck("UXDD"), BadAlphabet);
}

TEST_CASE("render_dyck inverts parse_dyck on the canonical alphabet") {
    for (const char* s : {"", "UD", "UUDD", "UDUUDUUDUDDD"})
        CHECK(render_dyck(parse_dyck(s)) == s);
    CHECK(render_dyck(parse_dyck("(())()")) == "UUDDUD");
}

TEST_CASE("parse_tree") {
    CHECK(parse_tree("()").size() == 1);
    PlantedPlaneTree t = parse_tree("(()(()))");
    CHECK(t.children.size() == 2);
    CHECK(t.children[1].children.size() == 1);
    CHECK_THROWS_AS(parse_tree("(()"), NonBalanced);
    CHECK_THROWS_AS(parse_tree(""), NonBalanced);
    CHECK_THROWS_AS(parse_tree("()()"), TrailingGarbage);
    CHECK(render_tree(parse_tree(" (()(())) ")) == "(()(()))");
}

TEST_CASE("parse_elena_word grammar") {
    ElenaWord w = parse_elena_word("a p5 p3 p1 a p4 a a p3 p1 p1 a");
    REQUIRE(w.blocks.size() == 4);
    CHECK(w.blocks[0] == std::vector<int>{5, 3, 1});
    CHECK(w.blocks[1] == std::vector<int>{4});
    CHECK(w.blocks[2].empty());
    CHECK(w.blocks[3] == std::vector<int>{3, 1, 1});
    CHECK(w.size() == 23);

    CHECK(parse_elena_word("a").blocks.empty());
    CHECK(parse_elena_word("a").size() == 1);
    CHECK_THROWS_AS(parse_elena_word("p2 a"), GrammarViolation);
    CHECK_THROWS_AS(parse_elena_word("a p1"), GrammarViolation);
    CHECK_THROWS_AS(parse_elena_word(""), GrammarViolation);
    CHECK_THROWS_AS(parse_elena_word("a p0 a"), BadToken);
    CHECK_THROWS_AS(parse_elena_word("a px a"), BadToken);
    CHECK_THROWS_AS(parse_elena_word("a b a"), BadToken);
}

TEST_CASE("word size matches token accounting") {
    for (std::size_t n = 1; n <= 9; ++n)
        for (const ElenaWord& w : enumerate_elenas(n)) {
            std::size_t expect = 1 + w.blocks.size();
            for (const auto& b : w.blocks)
                for (int m : b) expect += static_cast<std::size_t>(m);
            CHECK(w.size() == expect);
            CHECK(w.size() == n);
        }
}

TEST_CASE("codec round trips on random instances") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        // random balanced path of length up to 60
        std::vector<Step> steps;
        int n = static_cast<int>(rng() % 31);
        int ups = n, downs = n;
        while (ups + downs > 0) {
            bool up = ups > 0 && (downs == ups || rng() % 2 == 0);
            if (up) {
                steps.push_back(Step::Up);
                --ups;
            } else {
                steps.push_back(Step::Down);
                --downs;
            }
        }
        DyckPath p{steps};
        CHECK(parse_dyck(render_dyck(p)) == p);
        PlantedPlaneTree t = dyck_to_tree(p);
        CHECK(parse_tree(render_tree(t)) == t);
    }
    for (int iter = 0; iter < 200; ++iter) {
        ElenaWord w;
        std::size_t blocks = rng() % 5;
        for (std::size_t b = 0; b < blocks; ++b) {
            w.blocks.emplace_back();
            std::size_t len = rng() % 4;
            for (std::size_t i = 0; i < len; ++i)
                w.blocks.back().push_back(1 + static_cast<int>(rng() % 12));
        }
        CHECK(parse_elena_word(render_elena_word(w)) == w);
    }
}

TEST_CASE("stat record JSON is deterministic and fully numeric") {
    StatRecord r;
    r.root_degree = 3;
    r.leaves = 3;
    r.height = 2;
    r.psi = 7;
    r.path_length = 7;
    r.paths = 2;
    r.spine_nodes = 2;
    r.path_nodes = 2;
    CHECK(render_stat_record_json(r) ==
          "{\"root_degree\":3,\"leaves\":3,\"height\":2,\"psi\":7,"
          "\"path_length\":7,\"paths\":2,\"spine_nodes\":2,\"path_nodes\":2}");
}
