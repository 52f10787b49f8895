#include "qpt/lmg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpt/errors.hpp"

namespace qpt::lmg {

namespace {
constexpr double pi = std::numbers::pi;
}

void LMGParams::validate() const
{
    if (!(gamma >= 0.0) || gamma >= 1.0)
        throw InvalidParams("gamma must lie in [0, 1)");
    if (!(field >= 0.0))
        throw InvalidParams("field must be >= 0");
    if (n_spins < 2)
        throw InvalidParams("n_spins must be >= 2");
}

double semiclassical_angle(double h)
{
    if (!(h >= 0.0))
        throw InvalidParams("field must be >= 0");
    return h < 1.0 ? std::acos(h) : 0.0;
}

BogoliubovParams bogoliubov_params(const LMGParams& params)
{
    params.validate();
    const double h = params.field;
    const double g = params.gamma;
    BogoliubovParams bp{};
    bp.theta = semiclassical_angle(h);
    const double c = std::cos(bp.theta);
    const double s2 = 1.0 - c * c;
    bp.delta = s2 - 0.5 * (g + c * c) + h * c;
    bp.gamma_b = 0.25 * (g - c * c);
    bp.tanh2x = 2.0 * bp.gamma_b / bp.delta;
    if (!(std::abs(bp.tanh2x) < 1.0))
        throw SingularInput("tanh 2x = " + std::to_string(bp.tanh2x) +
                            ": Bogoliubov transformation singular (h = 1 line)");
    // tanh x = (1 - sqrt(1 - w^2)) / w, rationalized to w / (1 + sqrt(...))
    // which is stable both for w -> 0 and w -> -1
    double w = bp.tanh2x;
    double tanhx = w / (1.0 + std::sqrt((1.0 - w) * (1.0 + w)));
    bp.t = tanhx * tanhx;
    return bp;
}

double mode_coefficient(int n)
{
    if (n < 0)
        throw InvalidParams("n must be >= 0");
    double c = 1.0;
    for (int i = 1; i <= n; ++i)
        c *= (2.0 * i - 1.0) / (2.0 * i);
    return c;
}

double lmg_phase(const LMGParams& params)
{
    auto bp = bogoliubov_params(params);
    const double t = bp.t;
    if (t == 0.0)
        return pi;
    if (t >= 1.0)
        throw NumericalError("t = tanh^2 x >= 1: sums of the phase formula overflow");
    const int k_max = params.n_spins / 2;
    double c = 1.0, tn = 1.0;
    double denom = 1.0; // n = 0 terms
    double numer = 0.0;
    for (int n = 1; n <= k_max; ++n) {
        c *= (2.0 * n - 1.0) / (2.0 * n);
        tn *= t;
        denom += c * tn;
        numer += 2.0 * n * c * tn;
    }
    return pi * (1.0 - numer / denom);
}

scaling::ScalingFit lmg_size_scaling(double gamma, double h_near_1,
                                     const std::vector<int>& sizes)
{
    if (sizes.size() < 4)
        throw InvalidParams("size scaling needs at least 4 sizes");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(sizes.size());
    for (int n : sizes)
        pts.emplace_back(n, lmg_phase({gamma, h_near_1, n}));
    return scaling::fit_linear(pts);
}

} // namespace qpt::lmg
