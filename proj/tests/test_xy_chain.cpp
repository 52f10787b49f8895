#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qpt/errors.hpp"
#include "qpt/oracle.hpp"
#include "qpt/xy_chain.hpp"

using namespace qpt;
constexpr double pi = std::numbers::pi;

namespace {

double wrap(double x)
{
    double w = std::remainder(x, 2.0 * pi);
    return w <= -pi ? w + 2.0 * pi : w;
}

} // namespace

TEST_CASE("mode angles: worked N=3 Ising point")
{
    auto modes = xy::mode_angles({1.0, 0.0, 3});
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].phi == doctest::Approx(2.0 * pi / 3).epsilon(1e-15));
    CHECK(modes[0].lambda_k == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(modes[0].cos_theta == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(!modes[0].gapless);
}

TEST_CASE("mode angles: XX chain at lambda=1 flips all modes down")
{
    for (const auto& m : xy::mode_angles({0.0, 1.0, 5})) {
        CHECK(m.lambda_k > 0.0);
        CHECK(m.cos_theta == doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("mode angles: Ising chain gapped at finite size")
{
    for (const auto& m : xy::mode_angles({1.0, 1.0, 9}))
        CHECK(m.lambda_k > 0.0);
}

TEST_CASE("mode angles: parameter validation")
{
    CHECK_THROWS_AS(xy::mode_angles({1.0, 0.0, 4}), InvalidParams);
    CHECK_THROWS_AS(xy::mode_angles({1.0, 0.0, 1}), InvalidParams);
    CHECK_THROWS_AS(xy::mode_angles({1.0, 0.0, -3}), InvalidParams);
    CHECK_THROWS_AS(xy::mode_angles({std::nan(""), 0.0, 3}), InvalidParams);
}

TEST_CASE("ground phase: worked values and asymptotics")
{
    CHECK(xy::ground_phase_finite({1.0, 0.0, 3}).beta_g ==
          doctest::Approx(1.5 * pi).epsilon(1e-14));
    CHECK(xy::ground_phase_finite({1.0, 1e8, 51}).beta_g ==
          doctest::Approx(2.0 * pi).epsilon(1e-7));
    // finite sum approaches the quadrature limit
    double finite = xy::ground_phase_finite({1.0, 0.0, 10001}).beta_g;
    double limit = xy::ground_phase_limit(1.0, 0.0).beta_g;
    CHECK(std::abs(finite - limit) < 1e-3);
}

TEST_CASE("ground phase limit: closed-form checkpoints")
{
    CHECK(xy::ground_phase_limit(1.0, 0.0).beta_g == doctest::Approx(pi).epsilon(1e-10));
    // cos theta_phi = -sin(phi/2) at the Ising critical point
    CHECK(xy::ground_phase_limit(1.0, 1.0).beta_g ==
          doctest::Approx(pi + 2.0).epsilon(1e-10));
    CHECK(xy::ground_phase_limit(1.0, 1e6).beta_g ==
          doctest::Approx(2.0 * pi).epsilon(1e-5));
    // independently computed reference (adaptive quadrature oracle)
    CHECK(xy::ground_phase_limit(1.0, 0.5).beta_g ==
          doctest::Approx(3.954190426509714).epsilon(1e-12));
    CHECK(xy::ground_phase_limit(0.5, 1.5).beta_g ==
          doctest::Approx(6.161688387763936).epsilon(1e-12));
}

TEST_CASE("phase derivative: worked N=3 value and finite differences")
{
    CHECK(xy::phase_derivative_finite({1.0, 0.0, 3}) ==
          doctest::Approx(0.75 * pi).epsilon(1e-14));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> gam(0.1, 1.5), lam(0.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        xy::XYParams p{gam(rng), lam(rng), 2 * (rng() % 80) + 21};
        double h = 1e-6;
        double fd = (xy::ground_phase_finite({p.gamma, p.lambda + h, p.n_sites}).beta_g -
                     xy::ground_phase_finite({p.gamma, p.lambda - h, p.n_sites}).beta_g) /
                    (2 * h);
        double analytic = xy::phase_derivative_finite(p);
        CHECK(std::abs(fd - analytic) <= 1e-5 * std::max(1.0, std::abs(analytic)));
    }
}

TEST_CASE("phase derivative grows with size at the pseudo-critical point")
{
    // peak heights must increase with N (log divergence)
    double h21 = 0, h101 = 0;
    for (double l = 0.85; l < 1.0; l += 0.001)
        h21 = std::max(h21, xy::phase_derivative_finite({1.0, l, 21}));
    for (double l = 0.97; l < 1.0; l += 0.0005)
        h101 = std::max(h101, xy::phase_derivative_finite({1.0, l, 101}));
    CHECK(h101 > h21);
}

TEST_CASE("phase derivative limit: references and singular locus")
{
    CHECK(xy::phase_derivative_limit(1.0, 0.0) ==
          doctest::Approx(pi / 2).epsilon(1e-10));
    // quadrature references computed independently
    CHECK(xy::phase_derivative_limit(1.0, 0.99) ==
          doctest::Approx(4.750790152703576).epsilon(1e-10));
    CHECK(xy::phase_derivative_limit(1.0, 0.999) ==
          doctest::Approx(6.997191357276467).epsilon(1e-10));
    CHECK(xy::phase_derivative_limit(0.5, 2.0) ==
          doctest::Approx(0.069056602409448).epsilon(1e-9));
    CHECK_THROWS_AS(xy::phase_derivative_limit(1.0, 1.0), SingularInput);

    // logarithmic growth toward lambda = 1: increments track kappa ln 10
    double d1 = xy::phase_derivative_limit(1.0, 0.99);
    double d2 = xy::phase_derivative_limit(1.0, 0.999);
    double d3 = xy::phase_derivative_limit(1.0, 0.9999);
    CHECK((d3 - d2) / (d2 - d1) == doctest::Approx(1.0).epsilon(0.05));

    // matches the finite-difference of the phase integral
    double h = 1e-4;
    double fd = (xy::ground_phase_limit(0.5, 2.0 + h).beta_g -
                 xy::ground_phase_limit(0.5, 2.0 - h).beta_g) /
                (2 * h);
    CHECK(fd == doctest::Approx(xy::phase_derivative_limit(0.5, 2.0)).epsilon(1e-5));

    // finite-N value converges to the integral
    CHECK(xy::phase_derivative_finite({1.0, 0.0, 10001}) ==
          doctest::Approx(pi / 2).epsilon(1e-4));
}

TEST_CASE("XX closed form agrees with the small-gamma quadrature")
{
    CHECK(xy::xx_limit_phase(0.0).beta_g == doctest::Approx(pi).epsilon(1e-14));
    CHECK(xy::xx_limit_phase(0.5).beta_g ==
          doctest::Approx(4.0 * pi / 3).epsilon(1e-14));
    CHECK(xy::xx_limit_phase(2.0).beta_g == doctest::Approx(2.0 * pi).epsilon(1e-14));
    for (double lam : {0.0, 0.3, 0.5, 0.9, 1.3, 2.0})
        CHECK(xy::ground_phase_limit(1e-8, lam).beta_g ==
              doctest::Approx(xy::xx_limit_phase(lam).beta_g).epsilon(1e-6));
    CHECK(xy::xx_limit_derivative(0.5) ==
          doctest::Approx(2.0 / std::sqrt(0.75)).epsilon(1e-14));
    CHECK_THROWS_AS(xy::xx_limit_derivative(1.0), SingularInput);
}

TEST_CASE("gapless crossing: flagged and rejected by the derivative")
{
    // gamma = 0 and lambda = cos(2 pi / 5) puts mode k=1 exactly on the crossing
    double lam = std::cos(2.0 * pi / 5);
    auto modes = xy::mode_angles({0.0, lam, 5});
    CHECK(modes[0].gapless);
    CHECK(modes[0].cos_theta == 0.0);
    CHECK_THROWS_AS(xy::phase_derivative_finite({0.0, lam, 5}), SingularInput);
}

TEST_CASE("invariants: bounds, parity, monotonicity over random draws")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> gam(-2.0, 2.0), lam(0.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        int n = 2 * (rng() % 120) + 3;
        double g = gam(rng), l = lam(rng);
        double beta = xy::ground_phase_finite({g, l, n}).beta_g;
        CHECK(beta >= 0.0);
        CHECK(beta <= 2.0 * pi + 1e-12);
        // only gamma^2 enters
        CHECK(beta == doctest::Approx(xy::ground_phase_finite({-g, l, n}).beta_g)
                          .epsilon(1e-14));
        // nondecreasing in lambda
        double beta_up = xy::ground_phase_finite({g, l + 0.05, n}).beta_g;
        CHECK(beta_up >= beta - 1e-12);
    }
}

TEST_CASE("finite size converges to the limit as C/N away from criticality")
{
    const double g = 0.7, l = 0.5;
    const double limit = xy::ground_phase_limit(g, l).beta_g;
    double c_fit = std::abs(xy::ground_phase_finite({g, l, 101}).beta_g - limit) * 101;
    for (int n : {201, 401, 801, 1601}) {
        double diff = std::abs(xy::ground_phase_finite({g, l, n}).beta_g - limit);
        CHECK(diff <= 1.5 * c_fit / n + 1e-13);
    }
}

TEST_CASE("per-mode phase matches the discrete Wilson loop oracle")
{
    for (const auto& m : xy::mode_angles({0.8, 0.7, 9})) {
        double loop = oracle::per_mode_wilson_loop(m.cos_theta, 400000);
        double expected = pi * (1.0 - m.cos_theta);
        CHECK(std::abs(wrap(loop - expected)) < 1e-8);
    }
}

TEST_CASE("raw and scaled phases are both exposed")
{
    xy::XYParams p{1.0, 0.3, 11};
    auto scaled = xy::ground_phase_finite(p);
    auto raw = xy::ground_phase_raw(p);
    CHECK(scaled.scaled);
    CHECK(!raw.scaled);
    CHECK(raw.beta_g == doctest::Approx(scaled.beta_g * p.mode_count()).epsilon(1e-14));
}

TEST_CASE("analytic fidelity is a product over modes in [0, 1]")
{
    xy::XYParams a{1.0, 0.8, 9}, b{1.0, 0.82, 9};
    double f = xy::fidelity_analytic(a, b);
    CHECK(f > 0.99);
    CHECK(f <= 1.0);
    CHECK(xy::fidelity_analytic(a, a) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(xy::fidelity_analytic(a, {1.0, 0.8, 11}), InvalidParams);
}
