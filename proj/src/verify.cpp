#include "elena/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"
#include "elena/genfunc.hpp"
#include "elena/height4.hpp"
#include "elena/stats.hpp"
#include "elena/words.hpp"

namespace elena {

namespace {

CheckResult run(std::string name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = std::move(name);
    try {
        r.detail = body(); // empty or a summary means pass
        r.passed = true;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    return r;
}

[[noreturn]] void fail(const std::string& msg) { throw Error(msg); }

template <class T, class U>
void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", want " << want;
        fail(msg.str());
    }
}

std::size_t enum_limit(std::size_t n) { return std::max(n, kDefaultWordEnumLimit); }

} // namespace

CheckResult check_counting(std::size_t enum_max_n, std::size_t fib_max_n,
                           std::size_t dyck_filter_max_n) {
    return run("counting", [&]() -> std::string {
        const long long first[] = {1, 1, 2, 5, 13, 34, 89, 233};
        for (std::size_t n = 1; n <= 8; ++n)
            expect_eq(count_elenas(n), BigInt(first[n - 1]),
                      "count_elenas(" + std::to_string(n) + ")");

        for (std::size_t n = 1; n <= enum_max_n; ++n)
            expect_eq(BigInt(enumerate_elenas(n, enum_limit(n)).size()), count_elenas(n),
                      "enumeration count at n=" + std::to_string(n));

        BigInt fib_prev = 1, fib = 1; // F_1, F_2
        for (std::size_t i = 3; i <= 2 * fib_max_n; ++i) {
            BigInt next = fib + fib_prev;
            fib_prev = std::move(fib);
            fib = std::move(next);
            if (i % 2 == 1) {
                std::size_t n = (i + 3) / 2; // i = 2n - 3
                if (n >= 2 && n <= fib_max_n)
                    expect_eq(count_elenas(n), fib,
                              "Fibonacci identity at n=" + std::to_string(n));
            }
        }

        for (std::size_t n = 0; n <= dyck_filter_max_n; ++n) {
            std::size_t cnt = 0;
            for (const DyckPath& p : enumerate_dyck_paths(n, std::max<std::size_t>(n, 12)))
                if (is_nondecreasing(p)) ++cnt;
            expect_eq(BigInt(cnt), count_elenas(n + 1),
                      "nondecreasing-path count at length " + std::to_string(2 * n));
        }
        return "counts, Fibonacci identity, and Catalan filter agree";
    });
}

CheckResult check_glove_roundtrip(std::size_t path_max_n, std::size_t tree_max_size) {
    return run("glove_roundtrip", [&]() -> std::string {
        std::size_t paths = 0;
        for (std::size_t n = 0; n <= path_max_n; ++n)
            for (const DyckPath& p : enumerate_dyck_paths(n, std::max<std::size_t>(n, 12))) {
                if (tree_to_dyck(dyck_to_tree(p)) != p)
                    fail("path round trip failed for " + render_dyck(p));
                ++paths;
            }
        std::size_t trees = 0;
        for (std::size_t sz = 1; sz <= tree_max_size; ++sz)
            for (const DyckPath& p :
                 enumerate_dyck_paths(sz - 1, std::max<std::size_t>(sz, 12))) {
                PlantedPlaneTree t = dyck_to_tree(p);
                if (dyck_to_tree(tree_to_dyck(t)) != t)
                    fail("tree round trip failed for " + render_tree(t));
                ++trees;
            }
        return std::to_string(paths) + " paths and " + std::to_string(trees) +
               " trees round-trip";
    });
}

CheckResult check_figure_pair() {
    return run("figure1_pair", [&]() -> std::string {
        DyckPath p = parse_dyck("UDUUDUUDUDDD");
        expect_eq(render_dyck(p), std::string("UDUUDUUDUDDD"), "render_dyck");
        std::vector<int> v = valleys(p);
        expect_eq(v.size(), std::size_t{3}, "valley count");
        if (v != std::vector<int>{0, 1, 2}) fail("valleys are not [0,1,2]");
        if (!is_nondecreasing(p)) fail("path should be nondecreasing");
        expect_eq(render_tree(dyck_to_tree(p)), std::string("(()(()(()())))"),
                  "glove image");
        expect_eq(render_elena_word(dyck_to_word(p)), std::string("a p1 a p1 a p1 a"),
                  "word of the path");
        return "path, tree, and word of the worked example agree";
    });
}

CheckResult check_height4_bijection(std::size_t max_n) {
    return run("height4_bijection", [&]() -> std::string {
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::set<std::string> image;
            for (const ElenaWord& w : enumerate_elenas(n, enum_limit(n))) {
                PlantedPlaneTree t = elena_to_height4(w);
                if (t.size() != n)
                    fail("size not preserved for " + render_elena_word(w));
                if (height4_to_elena(t) != w)
                    fail("round trip failed for " + render_elena_word(w));
                if (!image.insert(render_tree(t)).second)
                    fail("image not injective at " + render_elena_word(w));
            }
            std::set<std::string> short_trees;
            for (const DyckPath& p :
                 enumerate_dyck_paths(n - 1, std::max<std::size_t>(n, 12))) {
                PlantedPlaneTree t = dyck_to_tree(p);
                if (t.height() <= 4) {
                    short_trees.insert(render_tree(t));
                    if (elena_to_height4(height4_to_elena(t)) != t)
                        fail("reverse round trip failed for " + render_tree(t));
                }
            }
            if (image != short_trees)
                fail("image differs from height<=4 trees at n=" + std::to_string(n));
        }
        return "image equals the height<=4 trees for every size up to " +
               std::to_string(max_n);
    });
}

CheckResult check_height4_examples() {
    return run("height4_examples", [&]() -> std::string {
        // The five size-4 columns: word, its tree, and the height-restricted image.
        const struct {
            const char* word;
            const char* elena_tree;
            const char* restricted;
        } cases[] = {
            {"a a a a", "(((())))", "(()()())"},
            {"a p2 a", "((())())", "(((())))"},
            {"a p1 a a", "(()(()))", "((())())"},
            {"a p1 p1 a", "(()()())", "((()()))"},
            {"a a p1 a", "((()()))", "(()(()))"},
        };
        for (const auto& c : cases) {
            ElenaWord w = parse_elena_word(c.word);
            expect_eq(render_tree(word_to_tree(w)), std::string(c.elena_tree),
                      std::string("Elena tree of ") + c.word);
            PlantedPlaneTree t = elena_to_height4(w);
            expect_eq(render_tree(t), std::string(c.restricted),
                      std::string("restricted tree of ") + c.word);
            if (height4_to_elena(t) != w)
                fail(std::string("round trip failed for ") + c.word);
        }
        return "all five size-4 pairs reproduced";
    });
}

CheckResult check_shape_equality(std::size_t max_n) {
    return run("shape_equality", [&]() -> std::string {
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::set<std::string> from_words, by_shape, from_paths;
            for (const ElenaWord& w : enumerate_elenas(n, enum_limit(n)))
                from_words.insert(render_tree(word_to_tree(w)));
            for (const DyckPath& p :
                 enumerate_dyck_paths(n - 1, std::max<std::size_t>(n, 12))) {
                PlantedPlaneTree t = dyck_to_tree(p);
                if (is_elena_shape(t)) by_shape.insert(render_tree(t));
                if (is_nondecreasing(p)) from_paths.insert(render_tree(t));
            }
            if (from_words != by_shape)
                fail("word trees differ from shape-tested trees at n=" + std::to_string(n));
            if (from_words != from_paths)
                fail("word trees differ from nondecreasing-path images at n=" +
                     std::to_string(n));
        }
        return "three-way set equality holds for every size up to " +
               std::to_string(max_n);
    });
}

CheckResult check_stats_oracle(std::size_t max_n) {
    return run("stats_oracle", [&]() -> std::string {
        std::vector<BigInt> count = series(gf_count(), max_n);
        std::vector<BigInt> root_degree = series(gf_root_degree(), max_n);
        std::vector<BigInt> leaves = series(gf_leaves(), max_n);
        std::vector<BigInt> paths = series(gf_paths(), max_n);
        std::vector<BigInt> spine = series(gf_spine_nodes(), max_n);
        std::vector<BigInt> path_nodes = series(gf_path_nodes(), max_n);
        std::vector<BigInt> psi = series(gf_descendants(), max_n);
        std::vector<BigInt> height = height_total_series(max_n);

        for (std::size_t n = 1; n <= max_n; ++n) {
            AggregateRow a = aggregate(n, enum_limit(n));
            std::string at = " at n=" + std::to_string(n);
            expect_eq(a.count, count[n], "count" + at);
            expect_eq(a.root_degree, root_degree[n], "root_degree total" + at);
            expect_eq(a.leaves, leaves[n], "leaves total" + at);
            expect_eq(a.paths, paths[n], "paths total" + at);
            expect_eq(a.spine_nodes, spine[n], "spine_nodes total" + at);
            expect_eq(a.path_nodes, path_nodes[n], "path_nodes total" + at);
            expect_eq(a.psi, psi[n], "psi total" + at);
            expect_eq(a.path_length, psi[n], "path_length total" + at);
            expect_eq(a.height_total, height[n], "height total" + at);
            expect_eq(a.spine_nodes + a.path_nodes, BigInt(n) * a.count,
                      "spine+path node partition" + at);
            expect_eq(a.leaves, a.paths + a.count, "leaves = paths + 1 lemma" + at);
        }
        return "all eight totals match series coefficients up to n=" +
               std::to_string(max_n);
    });
}

CheckResult check_psi_path_length(std::size_t max_n) {
    return run("psi_equals_path_length", [&]() -> std::string {
        for (std::size_t n = 1; n <= max_n; ++n)
            for (const ElenaWord& w : enumerate_elenas(n, enum_limit(n))) {
                StatRecord s = tree_stats(w);
                if (s.psi != s.path_length)
                    fail("psi != path_length for " + render_elena_word(w));
                if (s.spine_nodes + s.path_nodes != static_cast<long long>(n))
                    fail("node partition broken for " + render_elena_word(w));
            }
        return "identity holds per tree up to size " + std::to_string(max_n);
    });
}

CheckResult check_descendants_equation(std::size_t Nz) {
    return run("descendants_equation", [&]() -> std::string {
        verify_descendants_equation(Nz);
        return "functional equation exact at Nz=" + std::to_string(Nz);
    });
}

CheckResult check_master_equation(std::size_t Nz, std::size_t Nw, std::size_t w1_Nz) {
    return run("master_equation", [&]() -> std::string {
        verify_master_equation(Nz, Nw);
        verify_master_w1(w1_Nz);
        return "exact at Nz=" + std::to_string(Nz) + ", Nw=" + std::to_string(Nw) +
               "; w=1 instance exact at Nz=" + std::to_string(w1_Nz);
    });
}

CheckResult check_asymptotic_constants() {
    return run("asymptotic_constants", [&]() -> std::string {
        auto dev = [](const std::vector<AsymptoticRow>& rows, const std::string& name) {
            for (const auto& r : rows)
                if (r.name == name) return r.deviation;
            fail("missing statistic " + name);
        };
        std::vector<AsymptoticRow> at100 = asymptotics_report(100);
        auto require = [&](const std::string& name, double tol) {
            double d = dev(at100, name);
            if (!(d < tol))
                fail(name + " deviation " + std::to_string(d) + " not below " +
                     std::to_string(tol));
        };
        require("root_degree", 1e-6);
        require("leaves", 1e-8);
        require("paths", 1e-8);
        require("spine_nodes", 1e-8);
        require("path_nodes", 1e-8);
        require("nodes_per_path", 1e-8);
        require("descendants", 1e-8);

        std::vector<AsymptoticRow> at500 = asymptotics_report(500);
        double h500 = dev(at500, "height"), h100 = dev(at100, "height");
        if (!(h500 < 1e-3))
            fail("height deviation at n=500 is " + std::to_string(h500));
        if (!(h500 < h100)) fail("height convergence trend broken");

        // [z^n]E against its dominant-singularity equivalent.
        const std::size_t n = 40;
        std::vector<BigInt> e = series(gf_count(), n);
        long double s5 = std::sqrt(5.0L);
        long double alpha = (1.0L + s5) / 2.0L;
        long double lead = (1.0L - 2.0L / s5) * std::pow(alpha, 2.0L * n);
        long double ratio = e[n].convert_to<long double>() / lead;
        if (!(std::fabs(ratio - 1.0L) < 1e-10L))
            fail("coefficient asymptotic off by " +
                 std::to_string(static_cast<double>(ratio - 1.0L)));
        return "all limiting constants reached at their tolerances";
    });
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_counting(opt.stats_max_n, 50,
                                 std::min<std::size_t>(opt.max_n - 1, 11)));
    out.push_back(check_glove_roundtrip(std::min<std::size_t>(opt.max_n - 2, 10),
                                        std::min<std::size_t>(opt.max_n - 1, 11)));
    out.push_back(check_figure_pair());
    out.push_back(check_height4_bijection(opt.max_n));
    out.push_back(check_height4_examples());
    out.push_back(check_shape_equality(opt.max_n));
    out.push_back(check_stats_oracle(opt.stats_max_n));
    out.push_back(check_psi_path_length(opt.stats_max_n));
    out.push_back(check_descendants_equation(opt.desc_Nz));
    out.push_back(check_master_equation(opt.master_Nz, opt.master_Nw, opt.w1_Nz));
    out.push_back(check_asymptotic_constants());
    return out;
}

} // namespace elena
