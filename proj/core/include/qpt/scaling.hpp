#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace qpt::scaling {

enum class FitKind { LogSize, LogDistance, PowerLaw, Linear };

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    FitKind kind = FitKind::Linear;
    int n_points = 0;
};

struct PeakLocation {
    double lambda_m;
    double height;
    double bracket_lo;
    double bracket_hi;
};

// Golden-section maximization of a unimodal curve on [lo, hi] down to an
// interval of length tol. Throws NumericalError with a widen-bracket hint
// when the located maximum is not interior to the bracket.
PeakLocation locate_peak(const std::function<double(double)>& curve,
                         double lo, double hi, double tol = 1e-7);

// Least squares of value against ln N. Requires >= 4 sizes spanning at
// least a factor 10^1.5.
ScalingFit fit_log_size(const std::vector<std::pair<double, double>>& size_value);

// Least squares of value against ln|lambda - lambda_c|. Points straddling
// lambda_c are rejected.
ScalingFit fit_log_distance(const std::vector<std::pair<double, double>>& lambda_value,
                            double lambda_c);

// Least squares of ln(distance) against ln N; slope = -exponent.
ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& size_distance);

// Plain linear least squares of value against x.
ScalingFit fit_linear(const std::vector<std::pair<double, double>>& x_value);

// nu = |kappa2 / kappa1|.
double critical_exponent(double kappa1, double kappa2);

// Dynamical exponent z from the small-momentum expansion of the spectrum at
// lambda = 1: slope of ln Lambda_phi vs ln phi over phi in [1e-4, 1e-3].
double dynamical_exponent(double gamma);

} // namespace qpt::scaling
