#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elena/codec.hpp"
#include "elena/dyck.hpp"
#include "elena/genfunc.hpp"
#include "elena/height4.hpp"
#include "elena/stats.hpp"
#include "elena/verify.hpp"
#include "elena/words.hpp"

namespace {

using namespace elena;

int cmd_count(std::size_t max_n, bool csv) {
    // Second column recomputed from the path-counting series rather than
    // reusing count_elenas, so the printed agreement is informative.
    std::vector<BigInt> paths = series(RationalGF(Poly{1, -2}, Poly{1, -3, 1}), max_n);
    if (csv) std::cout << "n,count,nondecreasing_dyck_2nm2\n";
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (csv)
            std::cout << n << ',' << count_elenas(n) << ',' << paths[n - 1] << '\n';
        else
            std::cout << n << ", " << count_elenas(n) << ", " << paths[n - 1] << '\n';
    }
    return 0;
}

int cmd_enumerate(std::size_t n, const std::string& format, std::size_t limit) {
    for (const ElenaWord& w : enumerate_elenas(n, limit)) {
        if (format == "word")
            std::cout << render_elena_word(w) << '\n';
        else if (format == "dyck")
            std::cout << render_dyck(word_to_dyck(w)) << '\n';
        else if (format == "tree")
            std::cout << render_tree(word_to_tree(w)) << '\n';
        else
            std::cout << render_tree(elena_to_height4(w)) << '\n';
    }
    return 0;
}

int cmd_stats(std::size_t n, bool compare, bool csv, bool json, std::size_t limit) {
    AggregateRow a = aggregate(n, limit);
    if (csv)
        std::cout << kAggregateCsvHeader << '\n' << aggregate_csv_row(a) << '\n';
    else if (json)
        std::cout << aggregate_json(a) << '\n';
    else
        std::cout << "n=" << a.n << " count=" << a.count
                  << " root_degree=" << a.root_degree << " leaves=" << a.leaves
                  << " paths=" << a.paths << " spine_nodes=" << a.spine_nodes
                  << " path_nodes=" << a.path_nodes << " psi=" << a.psi
                  << " path_length=" << a.path_length
                  << " height_total=" << a.height_total << '\n';
    if (!compare) return 0;

    struct Column {
        const char* name;
        const BigInt* brute;
        BigInt expected;
    };
    std::vector<BigInt> height = height_total_series(n);
    Column cols[] = {
        {"root_degree", &a.root_degree, series(gf_root_degree(), n)[n]},
        {"leaves", &a.leaves, series(gf_leaves(), n)[n]},
        {"paths", &a.paths, series(gf_paths(), n)[n]},
        {"spine_nodes", &a.spine_nodes, series(gf_spine_nodes(), n)[n]},
        {"path_nodes", &a.path_nodes, series(gf_path_nodes(), n)[n]},
        {"psi", &a.psi, series(gf_descendants(), n)[n]},
        {"path_length", &a.path_length, series(gf_descendants(), n)[n]},
        {"height_total", &a.height_total, height[n]},
    };
    bool all_ok = true;
    for (const Column& c : cols) {
        bool ok = (*c.brute == c.expected);
        all_ok = all_ok && ok;
        std::cout << c.name << " brute=" << *c.brute << " series=" << c.expected
                  << (ok ? " MATCH" : " MISMATCH") << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opt) {
    bool all_ok = true;
    for (const CheckResult& r : run_verification(opt)) {
        all_ok = all_ok && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
                  << '\n';
    }
    return all_ok ? 0 : 1;
}

std::string fixed10(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(10) << v;
    return out.str();
}

std::string sci3(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << v;
    return out.str();
}

int cmd_table(std::size_t n, bool csv, std::size_t budget) {
    std::vector<AsymptoticRow> rows = asymptotics_report(n, budget);
    if (csv) {
        std::cout << "statistic,convergent,constant,deviation\n";
        for (const auto& r : rows)
            std::cout << r.name << ',' << fixed10(r.convergent) << ','
                      << fixed10(r.constant) << ',' << sci3(r.deviation) << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << std::left << std::setw(16) << r.name << " convergent "
                      << fixed10(r.convergent) << "  constant " << fixed10(r.constant)
                      << "  deviation " << sci3(r.deviation) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration, bijections, and series checks for "
                 "nondecreasing Dyck paths and their tree equivalents"};
    app.require_subcommand(1);

    std::size_t max_n = 8;
    bool csv = false, json = false, compare = false;
    std::size_t n = 4;
    std::string format = "word";
    std::size_t word_limit = elena::kDefaultWordEnumLimit;
    std::size_t budget = elena::kDefaultSeriesBudget;
    elena::VerifyOptions vopt;
    std::vector<std::size_t> orders;

    CLI::App* count = app.add_subcommand("count", "Counts per size, with the path count alongside");
    count->add_option("--max-n", max_n, "largest size to print")->check(CLI::PositiveNumber);
    count->add_flag("--csv", csv, "CSV output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "List every object of one size");
    enumerate->add_option("--n", n, "object size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--format", format, "word|dyck|tree|height4")
        ->check(CLI::IsMember({"word", "dyck", "tree", "height4"}));
    enumerate->add_option("--limit", word_limit, "enumeration size limit");

    CLI::App* stats = app.add_subcommand("stats", "Exact totals over all objects of one size");
    stats->add_option("--n", n, "object size")->required()->check(CLI::PositiveNumber);
    stats->add_flag("--compare", compare, "check totals against series coefficients");
    stats->add_flag("--csv", csv, "CSV output");
    stats->add_flag("--json", json, "JSON output");
    stats->add_option("--limit", word_limit, "enumeration size limit");

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--max-n", vopt.max_n, "enumeration depth for the set checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--orders", orders, "series orders Nz Nw for the height identity")
        ->expected(2);

    CLI::App* table = app.add_subcommand("table", "Convergents against the limiting constants");
    table->add_option("--n", n, "size at which convergents are evaluated")
        ->required()->check(CLI::PositiveNumber);
    table->add_flag("--csv", csv, "CSV output");
    table->add_option("--budget", budget, "series-order budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(max_n, csv);
        if (enumerate->parsed()) return cmd_enumerate(n, format, word_limit);
        if (stats->parsed()) return cmd_stats(n, compare, csv, json, word_limit);
        if (verify->parsed()) {
            vopt.stats_max_n = std::max<std::size_t>(vopt.max_n, 14);
            if (!orders.empty()) {
                vopt.master_Nz = orders[0];
                vopt.master_Nw = orders[1];
            }
            return cmd_verify(vopt);
        }
        if (table->parsed()) return cmd_table(n, csv, budget);
    } catch (const elena::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
