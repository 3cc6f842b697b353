#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace elena {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first offending value on failure, summary on success
};

// Each check is self-contained and never throws; failures are reported in
// the result so a runner can keep going and print partial results.

CheckResult check_counting(std::size_t enum_max_n, std::size_t fib_max_n,
                           std::size_t dyck_filter_max_n);
CheckResult check_glove_roundtrip(std::size_t path_max_n, std::size_t tree_max_size);
CheckResult check_figure_pair();
CheckResult check_height4_bijection(std::size_t max_n);
CheckResult check_height4_examples();
CheckResult check_shape_equality(std::size_t max_n);
CheckResult check_stats_oracle(std::size_t max_n);
CheckResult check_psi_path_length(std::size_t max_n);
CheckResult check_descendants_equation(std::size_t Nz);
CheckResult check_master_equation(std::size_t Nz, std::size_t Nw, std::size_t w1_Nz);
CheckResult check_asymptotic_constants();

struct VerifyOptions {
    std::size_t max_n = 12;       // enumeration-backed set and bijection checks
    std::size_t stats_max_n = 14; // aggregate-vs-series cross-checks
    std::size_t desc_Nz = 8;
    std::size_t master_Nz = 30;
    std::size_t master_Nw = 10;
    std::size_t w1_Nz = 50;
};

/// The full suite in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

} // namespace elena
