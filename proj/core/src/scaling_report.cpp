#include "qpt/scaling_report.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "qpt/errors.hpp"
#include "qpt/probe_qubit.hpp"
#include "qpt/scaling.hpp"
#include "qpt/xy_chain.hpp"

namespace qpt::cli {

namespace {

constexpr double pi = std::numbers::pi;

double finite_derivative(const ScalingConfig& cfg, double lambda, int n)
{
    if (cfg.model == Model::Xy)
        return xy::phase_derivative_finite({cfg.gamma, lambda, n});
    return probe::probe_derivative({cfg.mu, cfg.nu, cfg.eta, {cfg.gamma, lambda, n}});
}

double limit_derivative(const ScalingConfig& cfg, double lambda)
{
    if (cfg.model == Model::Xy)
        return xy::phase_derivative_limit(cfg.gamma, lambda);
    return probe::probe_derivative_limit(cfg.mu, cfg.nu, cfg.eta, cfg.gamma, lambda);
}

// gamma = 0: the XX-class exponent comes from the closed-form derivative,
// ln(d beta/d lambda) ~ -nu ln(1 - lambda) as lambda -> 1-.
double xx_exponent(const ScalingConfig& cfg)
{
    std::vector<std::pair<double, double>> pts;
    const int n_pts = cfg.window_points;
    for (int i = 0; i < n_pts; ++i) {
        double d = 1e-4 * std::pow(100.0, static_cast<double>(i) / (n_pts - 1));
        double deriv = cfg.model == Model::Xy
                           ? xy::xx_limit_derivative(1.0 - d)
                           : probe::probe_derivative_limit(cfg.mu, cfg.nu, cfg.eta,
                                                           0.0, 1.0 - d);
        pts.emplace_back(d, deriv);
    }
    auto fit = scaling::fit_power_law(pts);
    return -fit.slope; // slope is -nu
}

} // namespace

void ScalingConfig::validate() const
{
    if (model != Model::Xy && model != Model::Probe)
        throw InvalidParams("scaling pipeline supports the xy and probe models");
    if (gamma < 0)
        throw InvalidParams("gamma must be >= 0");
    if (!(bracket_hi > bracket_lo) || !(peak_tol > 0))
        throw InvalidParams("bad peak bracket");
    if (!(window_hi > window_lo) || !(window_lo > 0))
        throw InvalidParams("bad kappa2 window");
    if (window_points < 4)
        throw InvalidParams("kappa2 window needs at least 4 points");
    for (int n : sizes)
        if (n < 3 || n % 2 == 0)
            throw InvalidParams("sizes must be odd and >= 3");
}

ScalingReport run_scaling(const ScalingConfig& config)
{
    config.validate();
    ScalingReport report;
    report.model = config.model;
    report.gamma = config.gamma;
    report.z = scaling::dynamical_exponent(config.gamma);

    if (config.gamma == 0.0) {
        report.has_kappa = false;
        report.kappa1 = report.kappa2 = std::numeric_limits<double>::quiet_NaN();
        report.shift_exponent = std::numeric_limits<double>::quiet_NaN();
        report.nu = xx_exponent(config);
        report.z_nu = report.z * report.nu;
        return report;
    }

    std::vector<std::pair<double, double>> height_pts, shift_pts;
    for (int n : config.sizes) {
        auto peak = scaling::locate_peak(
            [&](double lambda) { return finite_derivative(config, lambda, n); },
            config.bracket_lo, config.bracket_hi, config.peak_tol);
        report.peaks.push_back({n, peak.lambda_m, peak.height});
        height_pts.emplace_back(n, peak.height / pi);
        shift_pts.emplace_back(n, std::abs(peak.lambda_m - 1.0));
    }
    report.has_kappa = true;
    report.kappa1 = scaling::fit_log_size(height_pts).slope;
    report.shift_exponent = -scaling::fit_power_law(shift_pts).slope;

    std::vector<std::pair<double, double>> window_pts;
    for (int i = 0; i < config.window_points; ++i) {
        double d = config.window_lo *
                   std::pow(config.window_hi / config.window_lo,
                            static_cast<double>(i) / (config.window_points - 1));
        window_pts.emplace_back(1.0 - d, limit_derivative(config, 1.0 - d) / pi);
    }
    report.kappa2 = scaling::fit_log_distance(window_pts, 1.0).slope;
    report.nu = scaling::critical_exponent(report.kappa1, report.kappa2);
    report.z_nu = report.z * report.nu;
    return report;
}

std::string scaling_report_json(const ScalingReport& report)
{
    nlohmann::ordered_json j;
    j["model"] = model_name(report.model);
    j["gamma"] = report.gamma;
    j["normalization"] = "beta_over_pi";
    nlohmann::ordered_json peaks = nlohmann::ordered_json::array();
    for (const auto& p : report.peaks) {
        nlohmann::ordered_json row;
        row["n"] = p.n;
        row["lambda_m"] = p.lambda_m;
        row["height"] = p.height;
        peaks.push_back(row);
    }
    j["peaks"] = peaks;
    if (report.has_kappa) {
        j["kappa1"] = report.kappa1;
        j["kappa2"] = report.kappa2;
        j["shift_exponent"] = report.shift_exponent;
    } else {
        j["kappa1"] = nullptr;
        j["kappa2"] = nullptr;
        j["shift_exponent"] = nullptr;
    }
    j["nu"] = report.nu;
    j["z"] = report.z;
    j["z_nu"] = report.z_nu;
    return j.dump(2) + "\n";
}

} // namespace qpt::cli
