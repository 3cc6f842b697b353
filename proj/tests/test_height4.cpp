#include <doctest.h>

#include <set>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"
#include "elena/height4.hpp"
#include "elena/words.hpp"

using namespace elena;

TEST_CASE("interpret_path") {
    CHECK(interpret_path(1).size() == 1);
    CHECK(interpret_path(2).children.size() == 1);
    PlantedPlaneTree t = interpret_path(5);
    CHECK(t.children.size() == 4);
    CHECK(t.height() == 2);
    for (const auto& c : t.children) CHECK(c.children.empty());
}

TEST_CASE("height-restricted interpretation of small words") {
    CHECK(render_tree(elena_to_height4(parse_elena_word("a a a a"))) == "(()()())");
    CHECK(render_tree(elena_to_height4(parse_elena_word("a p2 a"))) == "(((())))");
    CHECK(render_tree(elena_to_height4(parse_elena_word("a p1 p1 a"))) == "((()()))");
    // the order-sensitive pair
    CHECK(render_tree(elena_to_height4(parse_elena_word("a p1 a a"))) == "((())())");
    CHECK(render_tree(elena_to_height4(parse_elena_word("a a p1 a"))) == "(()(()))");
}

TEST_CASE("height4_to_elena") {
    CHECK(render_elena_word(height4_to_elena(parse_tree("()"))) == "a");
    CHECK(render_elena_word(height4_to_elena(parse_tree("(()(()))"))) == "a a p1 a");
    CHECK_THROWS_AS(height4_to_elena(parse_tree("((((()))))")), TooTall); // 5-chain
    CHECK_THROWS_AS(height4_to_elena(parse_tree("(()((((()))))())")), TooTall);
}

TEST_CASE("bijection with height-restricted trees, exhaustively") {
    for (std::size_t n = 1; n <= 9; ++n) {
        std::set<std::string> image, restricted;
        for (const ElenaWord& w : enumerate_elenas(n)) {
            PlantedPlaneTree t = elena_to_height4(w);
            CHECK(t.size() == n);
            CHECK(t.height() <= 4);
            CHECK(height4_to_elena(t) == w);
            CHECK(image.insert(render_tree(t)).second);
        }
        for (const DyckPath& p : enumerate_dyck_paths(n - 1)) {
            PlantedPlaneTree t = dyck_to_tree(p);
            if (t.height() <= 4) restricted.insert(render_tree(t));
        }
        CHECK(image == restricted);
    }
}
