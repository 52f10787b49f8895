#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qpt/errors.hpp"
#include "qpt/scaling.hpp"
#include "qpt/xy_chain.hpp"

using namespace qpt;

TEST_CASE("locate_peak: synthetic quadratic")
{
    auto peak = scaling::locate_peak(
        [](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-7);
    CHECK(std::abs(peak.lambda_m - 0.3) < 1e-7);
    CHECK(peak.bracket_lo == 0.0);
    CHECK(peak.bracket_hi == 1.0);
}

TEST_CASE("locate_peak: pseudo-critical point drifts toward lambda = 1")
{
    auto curve = [](int n) {
        return [n](double l) { return xy::phase_derivative_finite({1.0, l, n}); };
    };
    auto p21 = scaling::locate_peak(curve(21), 0.5, 1.1, 1e-9);
    auto p101 = scaling::locate_peak(curve(101), 0.5, 1.1, 1e-9);
    auto p10001 = scaling::locate_peak(curve(10001), 0.5, 1.1, 1e-10);
    CHECK(p101.lambda_m < 1.0);
    CHECK(std::abs(p101.lambda_m - 1.0) < std::abs(p21.lambda_m - 1.0));
    CHECK(std::abs(p10001.lambda_m - 1.0) < 1e-3);
}

TEST_CASE("locate_peak: monotone curve rejected as non-unimodal")
{
    CHECK_THROWS_AS(scaling::locate_peak([](double x) { return x; }, 0.0, 1.0, 1e-7),
                    NumericalError);
}

TEST_CASE("fit_log_size: synthetic recovery is exact")
{
    std::vector<std::pair<double, double>> pts;
    for (double n : {21, 101, 501, 1001, 5001})
        pts.emplace_back(n, 0.3121 * std::log(n) + 2.0);
    auto fit = scaling::fit_log_size(pts);
    CHECK(fit.slope == doctest::Approx(0.3121).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.kind == scaling::FitKind::LogSize);
}

TEST_CASE("fit_log_size: preconditions")
{
    std::vector<std::pair<double, double>> few = {{10, 1}, {100, 2}, {1000, 3}};
    CHECK_THROWS_AS(scaling::fit_log_size(few), InvalidParams);
    std::vector<std::pair<double, double>> narrow = {{10, 1}, {12, 2}, {14, 3}, {16, 4}};
    CHECK_THROWS_AS(scaling::fit_log_size(narrow), InvalidParams);
}

TEST_CASE("fit_log_distance: synthetic recovery and straddle rejection")
{
    std::vector<std::pair<double, double>> pts;
    for (double d : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2})
        pts.emplace_back(1.0 - d, -0.3123 * std::log(d) + 0.7);
    auto fit = scaling::fit_log_distance(pts, 1.0);
    CHECK(fit.slope == doctest::Approx(-0.3123).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    pts.emplace_back(1.5, 1.0);
    CHECK_THROWS_AS(scaling::fit_log_distance(pts, 1.0), InvalidParams);
}

TEST_CASE("fit_power_law: synthetic exponent recovery")
{
    std::vector<std::pair<double, double>> pts;
    for (double n : {21, 101, 501, 1001})
        pts.emplace_back(n, std::pow(n, -1.803));
    auto fit = scaling::fit_power_law(pts);
    CHECK(-fit.slope == doctest::Approx(1.803).epsilon(1e-12));

    pts.emplace_back(2001, -1.0);
    CHECK_THROWS_AS(scaling::fit_power_law(pts), InvalidParams);
}

TEST_CASE("fits are invariant under point reordering")
{
    std::vector<std::pair<double, double>> pts;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    for (double n : {21, 101, 501, 1001, 5001})
        pts.emplace_back(n, 0.31 * std::log(n) + noise(rng));
    auto fit1 = scaling::fit_log_size(pts);
    std::reverse(pts.begin(), pts.end());
    auto fit2 = scaling::fit_log_size(pts);
    CHECK(fit1.slope == doctest::Approx(fit2.slope).epsilon(1e-13));
    CHECK(fit1.r_squared == doctest::Approx(fit2.r_squared).epsilon(1e-13));
}

TEST_CASE("critical_exponent")
{
    CHECK(scaling::critical_exponent(0.3121, -0.3123) ==
          doctest::Approx(0.3123 / 0.3121).epsilon(1e-12));
    CHECK(scaling::critical_exponent(0.4, -0.4) == doctest::Approx(1.0));
    CHECK_THROWS_AS(scaling::critical_exponent(0.0, 1.0), InvalidParams);
}

TEST_CASE("dynamical_exponent per universality class")
{
    CHECK(scaling::dynamical_exponent(1.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(scaling::dynamical_exponent(0.0) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(scaling::dynamical_exponent(0.5) == doctest::Approx(1.0).epsilon(1e-2));
}
