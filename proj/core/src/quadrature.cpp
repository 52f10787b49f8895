#include "qpt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    double val = GK::integrate(f, a, b, 0, 0.0, &err);
    if (!std::isfinite(val))
        throw QuadratureError("integrand produced a non-finite value");
    return {a, b, val, err};
}

// Error bookkeeping for a panel that cannot be improved further: its value
// is machine accurate, so charge it a few ulps of itself.
double settled_error(double value)
{
    return 32.0 * std::numeric_limits<double>::epsilon() * std::abs(value) +
           std::numeric_limits<double>::min();
}

// Globally adaptive scheme: keep a worklist of Gauss-Kronrod panels and
// split the worst one until the summed error estimate meets the budget.
// The Gauss-vs-Kronrod estimate floors at ~eps * max|f| independent of the
// panel width, so a split that brings no improvement means the panel is
// roundoff limited; such panels are settled rather than split forever.
QuadratureResult adapt(const std::function<double(double)>& f,
                       const std::vector<double>& edges, double abs_tol)
{
    std::priority_queue<Panel> panels;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = evaluate(f, edges[i], edges[i + 1]);
        total += p.value;
        total_err += p.error;
        panels.push(p);
    }
    constexpr int max_panels = 4000;
    const double eps = std::numeric_limits<double>::epsilon();
    int count = static_cast<int>(panels.size());
    while (total_err > abs_tol && !panels.empty() && count < max_panels) {
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.a + worst.b);
        double width = worst.b - worst.a;
        if (mid <= worst.a || mid >= worst.b ||
            width < 16.0 * eps * (std::abs(worst.a) + std::abs(worst.b))) {
            total_err += settled_error(worst.value) - worst.error;
            continue;
        }
        Panel left = evaluate(f, worst.a, mid);
        Panel right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        if (left.error + right.error >= 0.98 * worst.error) {
            // no improvement: noise floor reached on this piece
            total_err += settled_error(left.value) + settled_error(right.value) -
                         worst.error;
        } else {
            total_err += left.error + right.error - worst.error;
            panels.push(left);
            panels.push(right);
        }
        ++count;
    }
    if (total_err > abs_tol)
        throw QuadratureError("quadrature failed to converge to requested tolerance");
    return {total, total_err};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b, double abs_tol)
{
    return adapt(f, {a, b}, abs_tol);
}

QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     double a, double b,
                                     const std::vector<double>& breakpoints,
                                     double abs_tol)
{
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b)
            edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return adapt(f, edges, abs_tol);
}

} // namespace qpt
