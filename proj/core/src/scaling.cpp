#include "qpt/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/xy_chain.hpp"

namespace qpt::scaling {

namespace {

ScalingFit least_squares(const std::vector<std::pair<double, double>>& pts, FitKind kind)
{
    const int n = static_cast<int>(pts.size());
    if (n < 4)
        throw InvalidParams("fit requires at least 4 points, got " + std::to_string(n));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double det = n * sxx - sx * sx;
    double xspan = 0.0;
    {
        auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
        xspan = mx->first - mn->first;
    }
    if (det <= 0.0 || xspan == 0.0)
        throw InvalidParams("rank-deficient fit input (all abscissae equal)");
    ScalingFit fit;
    fit.kind = kind;
    fit.n_points = n;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean = sy / n;
    for (const auto& [x, y] : pts) {
        double r = y - (fit.slope * x + fit.intercept);
        ss_res += r * r;
        ss_tot += (y - mean) * (y - mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

} // namespace

PeakLocation locate_peak(const std::function<double(double)>& curve,
                         double lo, double hi, double tol)
{
    if (!(hi > lo) || !(tol > 0))
        throw InvalidParams("locate_peak needs hi > lo and tol > 0");
    const double f_lo = curve(lo);
    const double f_hi = curve(hi);
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = curve(c);
    double fd = curve(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = curve(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = curve(d);
        }
    }
    double x = 0.5 * (a + b);
    double fx = curve(x);
    if (fx < f_lo || fx < f_hi || x - lo < tol || hi - x < tol)
        throw NumericalError("curve not unimodal on bracket; retry with a wider bracket");
    return {x, fx, lo, hi};
}

ScalingFit fit_log_size(const std::vector<std::pair<double, double>>& size_value)
{
    std::vector<std::pair<double, double>> pts;
    pts.reserve(size_value.size());
    double n_min = 0, n_max = 0;
    for (const auto& [n, v] : size_value) {
        if (n <= 0)
            throw InvalidParams("sizes must be positive");
        n_min = n_min == 0 ? n : std::min(n_min, n);
        n_max = std::max(n_max, n);
        pts.emplace_back(std::log(n), v);
    }
    if (!pts.empty() && n_max / n_min < std::pow(10.0, 1.5))
        throw InvalidParams("size list must span at least 1.5 decades");
    return least_squares(pts, FitKind::LogSize);
}

ScalingFit fit_log_distance(const std::vector<std::pair<double, double>>& lambda_value,
                            double lambda_c)
{
    bool above = false, below = false;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(lambda_value.size());
    for (const auto& [lam, v] : lambda_value) {
        double d = lam - lambda_c;
        if (d == 0.0)
            throw InvalidParams("point exactly at lambda_c");
        (d > 0 ? above : below) = true;
        pts.emplace_back(std::log(std::abs(d)), v);
    }
    if (above && below)
        throw InvalidParams("points straddle lambda_c; fit one side at a time");
    return least_squares(pts, FitKind::LogDistance);
}

ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& size_distance)
{
    std::vector<std::pair<double, double>> pts;
    pts.reserve(size_distance.size());
    for (const auto& [n, d] : size_distance) {
        if (n <= 0)
            throw InvalidParams("sizes must be positive");
        if (d <= 0)
            throw InvalidParams("power-law fit needs positive distances");
        pts.emplace_back(std::log(n), std::log(d));
    }
    return least_squares(pts, FitKind::PowerLaw);
}

ScalingFit fit_linear(const std::vector<std::pair<double, double>>& x_value)
{
    return least_squares(x_value, FitKind::Linear);
}

double critical_exponent(double kappa1, double kappa2)
{
    if (kappa1 == 0.0)
        throw InvalidParams("kappa1 must be nonzero");
    return std::abs(kappa2 / kappa1);
}

double dynamical_exponent(double gamma)
{
    if (gamma < 0)
        throw InvalidParams("gamma must be >= 0");
    constexpr int n_pts = 20;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n_pts);
    for (int i = 0; i < n_pts; ++i) {
        double phi = 1e-4 * std::pow(10.0, static_cast<double>(i) / (n_pts - 1));
        pts.emplace_back(std::log(phi), std::log(xy::excitation_energy(gamma, 1.0, phi)));
    }
    return least_squares(pts, FitKind::PowerLaw).slope;
}

} // namespace qpt::scaling
