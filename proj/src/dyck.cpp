#include "elena/dyck.hpp"

namespace elena {

std::vector<int> altitude_profile(const DyckPath& p) {
    std::vector<int> out;
    out.reserve(p.length());
    int h = 0;
    for (Step s : p.steps()) {
        h += (s == Step::Up) ? 1 : -1;
        out.push_back(h);
    }
    return out;
}

std::vector<int> valleys(const DyckPath& p) {
    std::vector<int> out;
    const auto& st = p.steps();
    int h = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
        h += (st[i] == Step::Up) ? 1 : -1;
        if (st[i] == Step::Down && i + 1 < st.size() && st[i + 1] == Step::Up)
            out.push_back(h);
    }
    return out;
}

bool is_nondecreasing(const DyckPath& p) {
    std::vector<int> v = valleys(p);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

PlantedPlaneTree dyck_to_tree(const DyckPath& p) {
    PlantedPlaneTree root;
    std::vector<PlantedPlaneTree*> stack{&root};
    for (Step s : p.steps()) {
        if (s == Step::Up) {
            stack.back()->children.emplace_back();
            stack.push_back(&stack.back()->children.back());
        } else {
            stack.pop_back();
        }
    }
    return root;
}

namespace {

void append_dyck(const PlantedPlaneTree& t, std::vector<Step>& out) {
    for (const auto& c : t.children) {
        out.push_back(Step::Up);
        append_dyck(c, out);
        out.push_back(Step::Down);
    }
}

void enumerate_rec(std::size_t ups_left, std::size_t downs_owed,
                   std::vector<Step>& cur, std::vector<DyckPath>& out) {
    if (ups_left == 0 && downs_owed == 0) {
        out.emplace_back(cur); // already balanced by construction
        return;
    }
    if (ups_left > 0) {
        cur.push_back(Step::Up);
        enumerate_rec(ups_left - 1, downs_owed + 1, cur, out);
        cur.pop_back();
    }
    if (downs_owed > 0) {
        cur.push_back(Step::Down);
        enumerate_rec(ups_left, downs_owed - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

DyckPath tree_to_dyck(const PlantedPlaneTree& t) {
    std::vector<Step> steps;
    steps.reserve(2 * (t.size() - 1));
    append_dyck(t, steps);
    return DyckPath(std::move(steps));
}

std::vector<DyckPath> enumerate_dyck_paths(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw LimitExceeded("enumerate_dyck_paths: n = " + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit));
    std::vector<DyckPath> out;
    std::vector<Step> cur;
    cur.reserve(2 * n);
    enumerate_rec(n, 0, cur, out);
    return out;
}

} // namespace elena
