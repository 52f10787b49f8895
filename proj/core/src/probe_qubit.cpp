#include "qpt/probe_qubit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/quadrature.hpp"

namespace qpt::probe {

namespace {

constexpr double pi = std::numbers::pi;

double qubit_phase(double mu, double nu, double eta, double f)
{
    double s = mu + 4.0 * eta * f;
    return pi * (1.0 + s / std::hypot(s, nu));
}

} // namespace

double ProbeParams::theta0() const { return std::atan2(nu, mu); }

double ProbeParams::delta_shift() const
{
    return eta * (mu / std::hypot(mu, nu)) / ring.n_sites;
}

double ProbeParams::gap_shift() const { return 0.5 * std::hypot(mu, nu); }

void ProbeParams::validate() const
{
    if (mu == 0.0 && nu == 0.0)
        throw InvalidParams("degenerate test qubit: mu and nu both zero");
    ring.validate();
}

std::vector<BranchAngle> branch_angles(const ProbeParams& params, Branch branch)
{
    params.validate();
    const double kappa = branch == Branch::Ground ? 1.0 : -1.0;
    const double delta = kappa * params.delta_shift();
    const int m = params.ring.mode_count();
    std::vector<BranchAngle> angles;
    angles.reserve(m);
    for (int k = 1; k <= m; ++k) {
        double phi = 2.0 * pi * k / params.ring.n_sites;
        double eps = xy::lambda_minus_cos(params.ring.lambda, phi) + delta;
        double lam = std::hypot(eps, params.ring.gamma * std::sin(phi));
        angles.push_back({k, phi, eps, lam, lam > 0 ? eps / lam : 0.0});
    }
    return angles;
}

double f_function(double lambda, double gamma, int n_sites, double delta_shift)
{
    xy::XYParams ring{gamma, lambda, n_sites};
    ring.validate();
    double sum = 0.0;
    for (int k = 1; k <= ring.mode_count(); ++k) {
        double phi = 2.0 * pi * k / n_sites;
        double eps = xy::lambda_minus_cos(lambda, phi) + delta_shift;
        double lam = std::hypot(eps, gamma * std::sin(phi));
        if (lam > 0)
            sum += eps / lam;
    }
    return sum / n_sites;
}

double f_function_limit(double lambda, double gamma)
{
    if (gamma == 0.0) {
        if (lambda > 1.0)
            return 0.5;
        if (lambda < -1.0)
            return -0.5;
        return 0.5 - std::acos(lambda) / pi;
    }
    auto f = [=](double phi) {
        double eps = xy::lambda_minus_cos(lambda, phi);
        return eps / std::hypot(eps, gamma * std::sin(phi));
    };
    std::vector<double> breaks;
    if (lambda >= -1.0 && lambda <= 1.0) {
        double phi0 = std::acos(lambda);
        breaks = {phi0 / 8, phi0, 8 * phi0};
    }
    auto result = integrate_segmented(f, 0.0, pi, breaks, 1e-10);
    return result.value / (2.0 * pi);
}

xy::PhaseResult probe_phase(const ProbeParams& params)
{
    params.validate();
    double f = f_function(params.ring.lambda, params.ring.gamma,
                          params.ring.n_sites, params.delta_shift());
    return {qubit_phase(params.mu, params.nu, params.eta, f),
            xy::Method::FiniteSum, false};
}

xy::PhaseResult probe_phase_limit(double mu, double nu, double eta,
                                  double gamma, double lambda)
{
    if (mu == 0.0 && nu == 0.0)
        throw InvalidParams("degenerate test qubit: mu and nu both zero");
    double f = f_function_limit(lambda, gamma);
    return {qubit_phase(mu, nu, eta, f), xy::Method::Quadrature, false};
}

xy::PhaseResult probe_phase_xx_limit(double mu, double nu, double eta, double lambda)
{
    if (lambda < 0)
        throw InvalidParams("lambda must be >= 0");
    double s;
    if (lambda <= 1.0)
        s = mu + 2.0 * eta * (1.0 - 2.0 * std::acos(lambda) / pi);
    else
        s = mu + 2.0 * eta;
    return {pi * (1.0 + s / std::hypot(s, nu)), xy::Method::ClosedForm, false};
}

double probe_derivative(const ProbeParams& params)
{
    params.validate();
    auto angles = branch_angles(params, Branch::Ground);
    double df = 0.0;
    for (const auto& a : angles) {
        if (a.lambda_k == 0.0)
            throw SingularInput("gapless branch mode k=" + std::to_string(a.k));
        double s = params.ring.gamma * std::sin(a.phi);
        df += s * s / (a.lambda_k * a.lambda_k * a.lambda_k);
    }
    df /= params.ring.n_sites;
    double f = f_function(params.ring.lambda, params.ring.gamma,
                          params.ring.n_sites, params.delta_shift());
    double s = params.mu + 4.0 * params.eta * f;
    double rad = s * s + params.nu * params.nu;
    return pi * params.nu * params.nu / (rad * std::sqrt(rad)) * 4.0 * params.eta * df;
}

double probe_derivative_limit(double mu, double nu, double eta,
                              double gamma, double lambda)
{
    if (gamma == 0.0 && lambda == 1.0)
        throw SingularInput("df/dlambda diverges at lambda = 1 for gamma = 0");
    double df;
    if (gamma == 0.0) {
        df = lambda < 1.0 && lambda > -1.0
                 ? 1.0 / (pi * std::sqrt(1.0 - lambda * lambda))
                 : 0.0;
    } else {
        if (lambda == 1.0)
            throw SingularInput("df/dlambda diverges logarithmically at lambda = 1");
        auto f = [=](double phi) {
            double eps = xy::lambda_minus_cos(lambda, phi);
            double lam = std::hypot(eps, gamma * std::sin(phi));
            double s = gamma * std::sin(phi);
            return s * s / (lam * lam * lam);
        };
        std::vector<double> breaks;
        if (lambda >= -1.0 && lambda <= 1.0) {
            double phi0 = std::acos(lambda);
            breaks.insert(breaks.end(), {phi0 / 8, phi0, 8 * phi0});
        }
        double sc = std::sqrt(2.0 * std::abs(lambda - 1.0));
        if (sc > 0 && sc < 1)
            breaks.insert(breaks.end(), {sc / 8, sc, 8 * sc});
        df = integrate_segmented(f, 0.0, pi, breaks, 1e-8).value / (2.0 * pi);
    }
    double f_val = f_function_limit(lambda, gamma);
    double s = mu + 4.0 * eta * f_val;
    double rad = s * s + nu * nu;
    return pi * nu * nu / (rad * std::sqrt(rad)) * 4.0 * eta * df;
}

} // namespace qpt::probe
