#include "elena/words.hpp"

#include <algorithm>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"

namespace elena {

namespace {

PlantedPlaneTree chain(int m) {
    PlantedPlaneTree t;
    for (int i = 1; i < m; ++i) {
        PlantedPlaneTree next;
        next.children.push_back(std::move(t));
        t = std::move(next);
    }
    return t;
}

bool is_chain(const PlantedPlaneTree& t) {
    const PlantedPlaneTree* cur = &t;
    while (!cur->children.empty()) {
        if (cur->children.size() > 1) return false;
        cur = &cur->children.front();
    }
    return true;
}

int chain_length(const PlantedPlaneTree& t) {
    int m = 1;
    const PlantedPlaneTree* cur = &t;
    while (!cur->children.empty()) {
        cur = &cur->children.front();
        ++m;
    }
    return m;
}

} // namespace

PlantedPlaneTree word_to_tree(const ElenaWord& w) {
    // Build from the top spine node (a leaf) down to the root.
    PlantedPlaneTree spine;
    for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it) {
        PlantedPlaneTree node;
        for (int m : *it) node.children.push_back(chain(m));
        node.children.push_back(std::move(spine));
        spine = std::move(node);
    }
    return spine;
}

bool is_elena_shape(const PlantedPlaneTree& t) {
    const PlantedPlaneTree* cur = &t;
    while (!cur->children.empty()) {
        for (std::size_t i = 0; i + 1 < cur->children.size(); ++i)
            if (!is_chain(cur->children[i])) return false;
        cur = &cur->children.back();
    }
    return true;
}

ElenaWord tree_to_word(const PlantedPlaneTree& t) {
    if (!is_elena_shape(t)) throw NotElenaShape("tree is not an Elena shape");
    ElenaWord w;
    const PlantedPlaneTree* cur = &t;
    while (!cur->children.empty()) {
        std::vector<int> block;
        for (std::size_t i = 0; i + 1 < cur->children.size(); ++i)
            block.push_back(chain_length(cur->children[i]));
        w.blocks.push_back(std::move(block));
        cur = &cur->children.back();
    }
    return w;
}

DyckPath word_to_dyck(const ElenaWord& w) {
    return tree_to_dyck(word_to_tree(w));
}

ElenaWord dyck_to_word(const DyckPath& p) {
    if (!is_nondecreasing(p))
        throw NotNondecreasing("valley altitudes decrease");
    return tree_to_word(dyck_to_tree(p));
}

namespace {

// Token costs toward size - 1: each `a` opening a block costs 1, each p<k>
// costs k; the terminating `a` supplies the final unit of size.
void enum_rec(std::size_t budget, bool in_block, ElenaWord& cur,
              std::vector<ElenaWord>& out) {
    if (budget == 0) {
        out.push_back(cur);
        return;
    }
    cur.blocks.emplace_back();
    enum_rec(budget - 1, true, cur, out);
    cur.blocks.pop_back();
    if (in_block) {
        for (std::size_t k = 1; k <= budget; ++k) {
            cur.blocks.back().push_back(static_cast<int>(k));
            enum_rec(budget - k, true, cur, out);
            cur.blocks.back().pop_back();
        }
    }
}

} // namespace

std::vector<ElenaWord> enumerate_elenas(std::size_t n, std::size_t limit) {
    if (n == 0) throw Error("word size must be >= 1");
    if (n > limit)
        throw LimitExceeded("enumerate_elenas: n = " + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit));
    std::vector<ElenaWord> out;
    ElenaWord cur;
    enum_rec(n - 1, false, cur, out);
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        keys.emplace_back(render_elena_word(out[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<ElenaWord> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, i] : keys) sorted.push_back(std::move(out[i]));
    return sorted;
}

BigInt count_elenas(std::size_t n) {
    if (n == 0) return 0;
    BigInt prev = 1, cur = 1; // a_1, a_2
    if (n <= 2) return 1;
    for (std::size_t i = 3; i <= n; ++i) {
        BigInt next = 3 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace elena
