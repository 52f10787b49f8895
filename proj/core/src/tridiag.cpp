#include "qpt/tridiag.hpp"

#include <cmath>
#include <limits>

#include "qpt/errors.hpp"

namespace qpt::detail {

namespace {

// Number of eigenvalues strictly below x (Sturm count via the LDL^T
// recurrence, with the customary underflow guard).
int count_below(const std::vector<double>& d, const std::vector<double>& e, double x)
{
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = d[0] - x;
    if (q < 0)
        ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0)
            q = -tiny;
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0)
            ++count;
    }
    return count;
}

// Thomas solve of (T - sigma I) x = b; T - sigma I positive definite since
// sigma sits below the spectrum.
void shifted_solve(const std::vector<double>& d, const std::vector<double>& e,
                   double sigma, std::vector<double>& b)
{
    const std::size_t n = d.size();
    std::vector<double> c(n, 0.0);
    double piv = d[0] - sigma;
    c[0] = n > 1 ? e[0] / piv : 0.0;
    b[0] /= piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = d[i] - sigma - e[i - 1] * c[i - 1];
        if (i + 1 < n)
            c[i] = e[i] / piv;
        b[i] = (b[i] - e[i - 1] * b[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;)
        b[i] -= c[i] * b[i + 1];
}

} // namespace

TridiagGround tridiag_ground(const std::vector<double>& diag,
                             const std::vector<double>& sub)
{
    const std::size_t n = diag.size();
    if (n == 0 || sub.size() + 1 != n)
        throw InvalidParams("tridiag_ground: bad dimensions");

    // Gershgorin bounds.
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = (i > 0 ? std::abs(sub[i - 1]) : 0.0) + (i + 1 < n ? std::abs(sub[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double scale = std::max(std::abs(lo), std::abs(hi)) + 1.0;

    double a = lo, b = hi;
    for (int iter = 0; iter < 200 && b - a > 1e-14 * scale; ++iter) {
        double mid = 0.5 * (a + b);
        (count_below(diag, sub, mid) >= 1 ? b : a) = mid;
    }
    const double value = 0.5 * (a + b);

    const double sigma = value - 1e-10 * scale;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int iter = 0; iter < 4; ++iter) {
        shifted_solve(diag, sub, sigma, v);
        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0) || !std::isfinite(norm))
            throw NumericalError("inverse iteration failed");
        for (double& x : v)
            x /= norm;
    }
    // Rayleigh quotient sharpens the bisection value.
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rq += diag[i] * v[i] * v[i];
        if (i + 1 < n)
            rq += 2.0 * sub[i] * v[i] * v[i + 1];
    }
    return {rq, std::move(v)};
}

} // namespace qpt::detail
