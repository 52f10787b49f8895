#include "qpt/xy_chain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/quadrature.hpp"

namespace qpt::xy {

namespace {

constexpr double pi = std::numbers::pi;

// Interior breakpoints for the [0, pi] mode integrals: the zero of
// (cos phi - lambda) where the integrand kinks for small gamma, plus the
// two small-phi scales of the near-critical structure, |lambda - 1| (gap)
// and sqrt(2|lambda - 1|) (band curvature).
std::vector<double> mode_integral_breaks(double lambda)
{
    std::vector<double> breaks;
    if (lambda >= -1.0 && lambda <= 1.0) {
        double phi0 = std::acos(lambda);
        breaks.insert(breaks.end(), {phi0 / 8, phi0, 8 * phi0});
    }
    double d = std::abs(lambda - 1.0);
    for (double s : {d, std::sqrt(2.0 * d)})
        if (s > 0.0 && s < 1.0)
            breaks.insert(breaks.end(), {s / 8, s, 8 * s});
    return breaks;
}

} // namespace

void XYParams::validate() const
{
    if (n_sites < 3 || n_sites % 2 == 0)
        throw InvalidParams("n_sites must be odd and >= 3, got " + std::to_string(n_sites));
    if (!std::isfinite(gamma) || !std::isfinite(lambda))
        throw InvalidParams("gamma and lambda must be finite");
}

double lambda_minus_cos(double lambda, double phi)
{
    double s = std::sin(0.5 * phi);
    return (lambda - 1.0) + 2.0 * s * s;
}

double excitation_energy(double gamma, double lambda, double phi)
{
    return std::hypot(lambda_minus_cos(lambda, phi), gamma * std::sin(phi));
}

std::vector<ModeAngle> mode_angles(const XYParams& params)
{
    params.validate();
    const int m = params.mode_count();
    std::vector<ModeAngle> modes;
    modes.reserve(m);
    for (int k = 1; k <= m; ++k) {
        double phi = 2.0 * pi * k / params.n_sites;
        double lam_k = excitation_energy(params.gamma, params.lambda, phi);
        ModeAngle mode{k, phi, lam_k, 0.0, lam_k == 0.0};
        if (!mode.gapless)
            mode.cos_theta = -lambda_minus_cos(params.lambda, phi) / lam_k;
        // At an exact crossing (gamma = 0, lambda = cos phi_k) the gamma->0+
        // prescription puts the mode on the equator, cos theta = 0.
        modes.push_back(mode);
    }
    return modes;
}

PhaseResult ground_phase_finite(const XYParams& params)
{
    auto modes = mode_angles(params);
    double sum = 0.0;
    for (const auto& mode : modes)
        sum += 1.0 - mode.cos_theta;
    return {pi * sum / params.mode_count(), Method::FiniteSum, true};
}

PhaseResult ground_phase_raw(const XYParams& params)
{
    auto modes = mode_angles(params);
    double sum = 0.0;
    for (const auto& mode : modes)
        sum += 1.0 - mode.cos_theta;
    return {pi * sum, Method::FiniteSum, false};
}

PhaseResult ground_phase_limit(double gamma, double lambda)
{
    if (!std::isfinite(gamma) || !std::isfinite(lambda))
        throw InvalidParams("gamma and lambda must be finite");
    if (gamma == 0.0)
        return {xx_limit_phase(lambda).beta_g, Method::Quadrature, true};
    auto f = [gamma, lambda](double phi) {
        double lam = excitation_energy(gamma, lambda, phi);
        return 1.0 + lambda_minus_cos(lambda, phi) / lam;
    };
    auto result = integrate_segmented(f, 0.0, pi, mode_integral_breaks(lambda), 1e-9);
    return {result.value, Method::Quadrature, true};
}

double phase_derivative_finite(const XYParams& params)
{
    auto modes = mode_angles(params);
    double sum = 0.0;
    for (const auto& mode : modes) {
        if (mode.gapless)
            throw SingularInput("gapless mode k=" + std::to_string(mode.k) +
                                ": derivative has a zero denominator");
        double s = params.gamma * std::sin(mode.phi);
        sum += s * s / (mode.lambda_k * mode.lambda_k * mode.lambda_k);
    }
    return pi * sum / params.mode_count();
}

double phase_derivative_limit(double gamma, double lambda)
{
    if (!std::isfinite(gamma) || !std::isfinite(lambda))
        throw InvalidParams("gamma and lambda must be finite");
    if (gamma != 0.0 && lambda == 1.0)
        throw SingularInput("d beta/d lambda diverges logarithmically at lambda = 1");
    if (gamma == 0.0)
        return 0.0; // integrand vanishes identically for strictly gamma = 0
    auto f = [gamma, lambda](double phi) {
        double lam = excitation_energy(gamma, lambda, phi);
        double s = gamma * std::sin(phi);
        return s * s / (lam * lam * lam);
    };
    auto result = integrate_segmented(f, 0.0, pi, mode_integral_breaks(lambda), 1e-8);
    return result.value;
}

PhaseResult xx_limit_phase(double lambda)
{
    if (!std::isfinite(lambda))
        throw InvalidParams("lambda must be finite");
    double beta;
    if (lambda <= -1.0)
        beta = 0.0;
    else if (lambda <= 1.0)
        beta = 2.0 * pi - 2.0 * std::acos(lambda);
    else
        beta = 2.0 * pi;
    return {beta, Method::ClosedForm, true};
}

double xx_limit_derivative(double lambda)
{
    if (lambda == 1.0)
        throw SingularInput("XX derivative diverges at lambda = 1");
    if (lambda > 1.0 || lambda <= -1.0)
        return 0.0;
    return 2.0 / std::sqrt(1.0 - lambda * lambda);
}

double fidelity_analytic(const XYParams& a, const XYParams& b)
{
    if (a.n_sites != b.n_sites)
        throw InvalidParams("fidelity_analytic requires equal chain sizes");
    auto ma = mode_angles(a);
    auto mb = mode_angles(b);
    double f = 1.0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        double ta = std::acos(ma[i].cos_theta);
        double tb = std::acos(mb[i].cos_theta);
        f *= std::abs(std::cos(0.5 * (ta - tb)));
    }
    return f;
}

} // namespace qpt::xy
