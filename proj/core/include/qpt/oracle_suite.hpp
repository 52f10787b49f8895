#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qpt::cli {

// One analytic-vs-brute-force comparison: value is the measured discrepancy,
// pass means value <= tolerance.
struct OracleCheck {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

struct OracleConfig {
    std::vector<int> sizes{3, 5, 7, 9}; // ED sizes, each <= 11
    int per_mode_steps = 10000;
    int ed_phi_steps = 48;
    unsigned seed = 20568;
};

std::vector<OracleCheck> run_oracle(const OracleConfig& config);

bool all_pass(const std::vector<OracleCheck>& checks);
std::string format_oracle_report(const std::vector<OracleCheck>& checks);

// Relative agreement of an analytic derivative with the central finite
// difference of f. Reused by the suite and by mutation-sanity tests.
OracleCheck check_derivative_vs_fd(const std::string& name,
                                   const std::function<double(double)>& f,
                                   const std::function<double(double)>& df,
                                   double x, double step, double rel_tol);

} // namespace qpt::cli
