#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "qpt/errors.hpp"
#include "qpt/oracle.hpp"
#include "qpt/oracle_suite.hpp"
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

TEST_CASE("per-mode Wilson loop: poles, equator, worked mode")
{
    CHECK(std::abs(oracle::per_mode_wilson_loop(1.0, 10000)) < 1e-9);
    // cos theta = -1/2: pi (1 - cos) = 3 pi/2, wrapped to -pi/2
    CHECK(oracle::per_mode_wilson_loop(-0.5, 10000) ==
          doctest::Approx(-pi / 2).epsilon(1e-6));
    CHECK(oracle::per_mode_wilson_loop(0.0, 10000) == doctest::Approx(pi).epsilon(1e-6));
    CHECK_THROWS_AS(oracle::per_mode_wilson_loop(0.5, 50), InvalidParams);
    CHECK_THROWS_AS(oracle::per_mode_wilson_loop(1.5, 1000), InvalidParams);
}

TEST_CASE("per-mode Wilson loop: random angles within 1e-6 at 1e4 steps")
{
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        double ct = dist(rng);
        double loop = oracle::per_mode_wilson_loop(ct, 10000);
        CHECK(std::abs(wrap(loop - pi * (1.0 - ct))) < 1e-6);
    }
}

TEST_CASE("Wilson loop phase is gauge invariant")
{
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(0.0, 2 * pi);
    std::vector<Eigen::VectorXcd> states;
    for (int j = 0; j < 150; ++j) {
        Eigen::VectorXcd v(2);
        double phi = pi * j / 150;
        v[0] = std::cos(0.35);
        v[1] = std::complex<double>(0, -1) * std::exp(std::complex<double>(0, 2 * phi)) *
               std::sin(0.35);
        states.push_back(v);
    }
    double base = oracle::wilson_loop_phase(states);
    for (auto& v : states)
        v *= std::exp(std::complex<double>(0, dist(rng)));
    CHECK(oracle::wilson_loop_phase(states) == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("ED: worked N=3 Ising ground energy")
{
    xy::XYParams p{1.0, 0.0, 3};
    Eigen::MatrixXcd h = oracle::spin_chain_hamiltonian(p, 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    CHECK(solver.eigenvalues()[0] == doctest::Approx(-3.0).epsilon(1e-13));
    // equals -(2 sum_k Lambda_k + Lambda_0) exactly here
    double lam_sum = 0.0;
    for (const auto& m : xy::mode_angles(p))
        lam_sum += 2.0 * m.lambda_k;
    lam_sum += std::abs(p.lambda - 1.0);
    CHECK(solver.eigenvalues()[0] == doctest::Approx(-lam_sum).epsilon(1e-13));
}

TEST_CASE("ED: spectrum independent of the rotation angle")
{
    xy::XYParams p{1.0, 0.5, 5};
    Eigen::MatrixXcd h0 = oracle::spin_chain_hamiltonian(p, 0.0);
    Eigen::MatrixXcd h1 = oracle::spin_chain_hamiltonian(p, pi / 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> s0(h0), s1(h1);
    CHECK((s0.eigenvalues() - s1.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ED: normalized, phase-fixed ground vector and the size guard")
{
    xy::XYParams p{1.0, 0.5, 5};
    Eigen::VectorXcd v = oracle::spin_chain_ed_ground(p, 0.3);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    // deterministic phase: first significant component real positive
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-8) {
            CHECK(v[i].imag() == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(v[i].real() > 0.0);
            break;
        }
    }
    CHECK_THROWS_AS(oracle::spin_chain_ed_ground({1.0, 0.5, 13}, 0.0), InvalidParams);
}

TEST_CASE("ED: integer-momentum solution is exact in the odd-parity sector")
{
    for (auto [g, lam, n] : {std::tuple{1.0, 0.5, 5}, {1.0, 0.5, 7}, {0.5, 0.3, 7},
                             {1.0, 0.9, 9}}) {
        xy::XYParams p{g, lam, n};
        double expected = -std::abs(lam - 1.0);
        for (const auto& m : xy::mode_angles(p))
            expected -= 2.0 * m.lambda_k;
        CHECK(oracle::spin_chain_sector_energy(p, 0.0, -1) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("discrete Berry phase matches the raw mode sum")
{
    for (auto [g, lam, n, steps] :
         {std::tuple{1.0, 0.5, 3, 60}, {1.0, 0.5, 5, 60}, {0.5, 1.7, 5, 60},
          {1.0, 5.0, 9, 24}}) {
        xy::XYParams p{g, lam, n};
        double raw = xy::ground_phase_raw(p).beta_g;
        double loop = oracle::discrete_berry_phase(p, steps);
        CHECK(std::abs(wrap(loop - raw)) < 2.0 * pi / n);
    }
}

TEST_CASE("discrete Berry phase: doubling the phi grid is converged")
{
    xy::XYParams p{1.0, 0.5, 3};
    double a = oracle::discrete_berry_phase(p, 2500);
    double b = oracle::discrete_berry_phase(p, 5000);
    CHECK(std::abs(wrap(a - b)) < 1e-6);
}

TEST_CASE("mean-field oracle: phases and stationarity")
{
    auto normal = oracle::dicke_meanfield_oracle(4.0, 1.0); // L^2 < 2D
    CHECK(normal.u_star == 0.0);
    CHECK(normal.sigma_x == doctest::Approx(-1.0).epsilon(1e-14));

    // L^2 = 4D: sqrt(D^2 + L^2 u*) = L^2/2, so sigma_x = -1/2
    auto critical2 = oracle::dicke_meanfield_oracle(4.0, 4.0);
    CHECK(critical2.alpha == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(critical2.sigma_x == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("oracle suite passes end to end")
{
    cli::OracleConfig config;
    config.sizes = {3, 5, 7};
    auto checks = cli::run_oracle(config);
    for (const auto& c : checks) {
        INFO(c.name, " discrepancy=", c.value, " tol=", c.tolerance);
        CHECK(c.pass);
    }
    CHECK(cli::all_pass(checks));
    auto report = cli::format_oracle_report(checks);
    CHECK(report.find("PASS per_mode_loop_max_err") != std::string::npos);
}

TEST_CASE("oracle suite detects an injected sign error")
{
    auto check = cli::check_derivative_vs_fd(
        "xy_derivative_vs_fd",
        [](double x) { return xy::ground_phase_finite({0.8, x, 201}).beta_g; },
        [](double x) { return -xy::phase_derivative_finite({0.8, x, 201}); },
        0.6, 1e-6, 1e-5);
    CHECK(!check.pass);
    CHECK(check.name == "xy_derivative_vs_fd");
}
