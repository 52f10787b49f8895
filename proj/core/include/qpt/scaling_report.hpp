#pragma once

#include <string>
#include <vector>

#include "qpt/sweep.hpp"

namespace qpt::cli {

// Finite-size-scaling pipeline over the XY chain or the probe qubit.
// Divergence-coefficient fits (kappa1, kappa2) are taken on the phase
// measured in units of pi; the exponents nu, z and the pseudo-critical
// shift are normalization free.
struct ScalingConfig {
    Model model = Model::Xy; // xy or probe
    double gamma = 1.0;
    std::vector<int> sizes{21, 101, 501, 1001, 5001, 10001};
    double bracket_lo = 0.5;
    double bracket_hi = 1.1;
    double peak_tol = 1e-10;
    double window_lo = 1e-6; // |lambda - 1| window of the kappa2 fit
    double window_hi = 1e-2;
    int window_points = 20;
    double mu = 0.1; // probe fields
    double nu = 2.0;
    double eta = 0.5;
    int threads = 0;

    void validate() const;
};

struct PeakRow {
    int n;
    double lambda_m;
    double height;
};

struct ScalingReport {
    Model model;
    double gamma;
    std::vector<PeakRow> peaks; // empty on the gamma = 0 closed-form path
    bool has_kappa;
    double kappa1;
    double kappa2;
    double nu;
    double shift_exponent; // NaN when peaks are absent
    double z;
    double z_nu;
};

ScalingReport run_scaling(const ScalingConfig& config);

// Deterministic JSON rendering of the report (stable key order).
std::string scaling_report_json(const ScalingReport& report);

} // namespace qpt::cli
