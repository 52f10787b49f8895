#pragma once

#include <functional>
#include <vector>

namespace qpt {

struct QuadratureResult {
    double value;
    double error_estimate;
};

// Adaptive Gauss-Kronrod integration of f over [a, b]. Throws QuadratureError
// if the estimated absolute error cannot be brought below abs_tol.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol);

// Same, but the interval is pre-split at the given interior breakpoints
// (values outside (a, b) are ignored). Use to pin integrand kinks and
// near-singular peaks so the adaptive refinement starts on the right scale.
QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     double a, double b,
                                     const std::vector<double>& breakpoints,
                                     double abs_tol);

} // namespace qpt
