#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "qpt/errors.hpp"
#include "qpt/geom_tensor.hpp"
#include "qpt/oracle.hpp"
#include "qpt/xy_chain.hpp"

using namespace qpt;
using Eigen::MatrixXcd;
using Eigen::Vector2d;
using Eigen::VectorXcd;
using Eigen::VectorXd;
constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

namespace {

// Spin-1/2 in a unit field: H = (1/2) B(theta, phi) . sigma.
MatrixXcd bloch_hamiltonian(double theta, double phi)
{
    MatrixXcd h(2, 2);
    h(0, 0) = 0.5 * std::cos(theta);
    h(1, 1) = -0.5 * std::cos(theta);
    h(0, 1) = 0.5 * std::sin(theta) * std::exp(cd(0, -phi));
    h(1, 0) = 0.5 * std::sin(theta) * std::exp(cd(0, phi));
    return h;
}

geom::SpectralDecomposition decompose(const MatrixXcd& h)
{
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

geom::StateMap bloch_state_map()
{
    return [](const VectorXd& eta) -> VectorXcd {
        return decompose(bloch_hamiltonian(eta[0], eta[1])).states.col(0);
    };
}

geom::SpectralModel bloch_model()
{
    return [](const VectorXd& eta) {
        return decompose(bloch_hamiltonian(eta[0], eta[1]));
    };
}

geom::HamiltonianGradient bloch_gradient()
{
    return [](const VectorXd& eta) {
        double th = eta[0], ph = eta[1];
        MatrixXcd dth(2, 2), dph(2, 2);
        dth(0, 0) = -0.5 * std::sin(th);
        dth(1, 1) = 0.5 * std::sin(th);
        dth(0, 1) = 0.5 * std::cos(th) * std::exp(cd(0, -ph));
        dth(1, 0) = 0.5 * std::cos(th) * std::exp(cd(0, ph));
        dph(0, 0) = dph(1, 1) = 0.0;
        dph(0, 1) = 0.5 * std::sin(th) * cd(0, -1) * std::exp(cd(0, -ph));
        dph(1, 0) = 0.5 * std::sin(th) * cd(0, 1) * std::exp(cd(0, ph));
        return std::vector<MatrixXcd>{dth, dph};
    };
}

} // namespace

TEST_CASE("qgt: constant family gives a vanishing tensor")
{
    geom::StateMap constant = [](const VectorXd&) {
        VectorXcd v(3);
        v << 0.6, cd(0, 0.8), 0.0;
        return v;
    };
    VectorXd eta(2);
    eta << 0.3, 0.9;
    auto q = geom::qgt_numeric(constant, eta);
    CHECK(q.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("qgt: Bloch sphere benchmark values")
{
    VectorXd eta(2);
    eta << 1.1, 0.4;
    auto q = geom::qgt_numeric(bloch_state_map(), eta, {1e-5, true});
    geom::validate_tensor(q);
    CHECK(q(0, 0).real() == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(q(1, 1).real() ==
          doctest::Approx(0.25 * std::sin(1.1) * std::sin(1.1)).epsilon(1e-8));
    CHECK(q(0, 1).imag() == doctest::Approx(-std::sin(1.1) / 4).epsilon(1e-7));
}

TEST_CASE("qgt: gauge invariance under a smooth phase field")
{
    VectorXd eta(2);
    eta << 0.8, 1.7;
    auto base = geom::qgt_numeric(bloch_state_map(), eta);
    geom::StateMap gauged = [](const VectorXd& e) -> VectorXcd {
        VectorXcd v = bloch_state_map()(e);
        return v * std::exp(cd(0, 3.0 * e[0] - 2.0 * e[1]));
    };
    auto q = geom::qgt_numeric(gauged, eta);
    CHECK((q - base).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("berry curvature: monopole and the solid-angle loop phase")
{
    VectorXd eta(2);
    eta << 0.9, 0.3;
    auto v = geom::berry_curvature_sum(bloch_model(), eta, bloch_gradient());
    CHECK(v(0, 1) == doctest::Approx(-std::sin(0.9) / 4).epsilon(1e-10));
    CHECK(v(1, 0) == doctest::Approx(-v(0, 1)).epsilon(1e-12));

    // Curvature two-form F = -2 Im Q; its flux through the cap bounded by a
    // latitude loop reproduces the loop phase pi (1 - cos theta), checked
    // against the discrete Wilson loop oracle.
    double theta0 = 1.2;
    const int n = 400;
    double flux = 0.0;
    for (int i = 0; i < n; ++i) {
        double th = theta0 * (i + 0.5) / n;
        VectorXd p(2);
        p << th, 0.0;
        double v_th = geom::berry_curvature_sum(bloch_model(), p, bloch_gradient())(0, 1);
        flux += -2.0 * v_th * (theta0 / n) * 2.0 * pi;
    }
    double loop = oracle::per_mode_wilson_loop(std::cos(theta0), 20000);
    double expected = pi * (1.0 - std::cos(theta0));
    CHECK(flux == doctest::Approx(expected).epsilon(1e-6));
    CHECK(std::abs(std::remainder(loop - expected, 2.0 * pi)) < 1e-6);
}

TEST_CASE("berry curvature: maximal at the avoided crossing")
{
    auto model = [](const VectorXd& eta) {
        MatrixXcd h(2, 2);
        h(0, 0) = eta[0];
        h(1, 1) = -eta[0];
        h(0, 1) = cd(eta[1], -0.05);
        h(1, 0) = cd(eta[1], 0.05);
        return decompose(h);
    };
    auto grad = [](const VectorXd&) {
        MatrixXcd da(2, 2), db(2, 2);
        da.setZero();
        db.setZero();
        da(0, 0) = 1.0;
        da(1, 1) = -1.0;
        db(0, 1) = db(1, 0) = 1.0;
        return std::vector<MatrixXcd>{da, db};
    };
    auto at = [&](double a, double b) {
        VectorXd eta(2);
        eta << a, b;
        return std::abs(geom::berry_curvature_sum(model, eta, grad)(0, 1));
    };
    CHECK(at(0.0, 0.0) > at(0.4, 0.0));
    CHECK(at(0.0, 0.0) > at(0.0, 0.4));
}

TEST_CASE("berry curvature: degenerate ground state rejected")
{
    auto model = [](const VectorXd&) {
        geom::SpectralDecomposition sd;
        sd.energies = Eigen::Vector2d(0.0, 1e-12);
        sd.states = MatrixXcd::Identity(2, 2);
        return sd;
    };
    auto grad = [](const VectorXd&) {
        return std::vector<MatrixXcd>{MatrixXcd::Identity(2, 2)};
    };
    VectorXd eta(1);
    eta << 0.0;
    CHECK_THROWS_AS(geom::berry_curvature_sum(model, eta, grad), SingularInput);
}

TEST_CASE("qgt on the mode-product chain state integrates to the phase derivative")
{
    // (lambda, phi) manifold; the state is the tensor product of the M
    // two-level mode factors, dimension 2^M.
    const xy::XYParams params{1.0, 0.5, 9};
    auto state_at = [&](double lambda, double phi) -> VectorXcd {
        auto modes = xy::mode_angles({params.gamma, lambda, params.n_sites});
        VectorXcd state(1);
        state[0] = 1.0;
        for (const auto& m : modes) {
            double theta = std::acos(m.cos_theta);
            VectorXcd factor(2);
            factor[0] = std::cos(0.5 * theta);
            factor[1] = cd(0, -1) * std::exp(cd(0, 2 * phi)) * std::sin(0.5 * theta);
            VectorXcd next(state.size() * 2);
            for (Eigen::Index i = 0; i < state.size(); ++i) {
                next[2 * i] = state[i] * factor[0];
                next[2 * i + 1] = state[i] * factor[1];
            }
            state = next;
        }
        return state;
    };
    geom::StateMap map = [&](const VectorXd& eta) { return state_at(eta[0], eta[1]); };

    const int n_phi = 16;
    double integral = 0.0;
    for (int i = 0; i < n_phi; ++i) {
        VectorXd eta(2);
        eta << 0.5, pi * (i + 0.5) / n_phi;
        integral += geom::qgt_numeric(map, eta)(0, 1).imag() * pi / n_phi;
    }
    // Im Q_{lambda phi} integrates over [0, pi] to half the raw-sum slope
    double raw_derivative =
        params.mode_count() * xy::phase_derivative_finite(params);
    CHECK(integral == doctest::Approx(0.5 * raw_derivative).epsilon(1e-6));
}

TEST_CASE("fidelity: identity, analytic product, critical dip")
{
    VectorXd eta(2);
    eta << 0.7, 0.2;
    CHECK(geom::fidelity(bloch_state_map(), eta, eta) == doctest::Approx(1.0));

    // exact ED overlap in the matching parity sector equals the mode product
    for (int n : {5, 7}) {
        xy::XYParams a{1.0, 0.8, n}, b{1.0, 0.82, n};
        VectorXcd va = oracle::spin_chain_ed_ground_sector(a, 0.0, -1);
        VectorXcd vb = oracle::spin_chain_ed_ground_sector(b, 0.0, -1);
        CHECK(std::abs(va.dot(vb)) ==
              doctest::Approx(xy::fidelity_analytic(a, b)).epsilon(1e-10));
    }

    // fidelity of nearby ground states dips at the critical field
    double min_f = 2.0, argmin = 0.0;
    for (double l = 0.9; l <= 1.1; l += 1e-3) {
        double f = xy::fidelity_analytic({1.0, l, 1001}, {1.0, l + 1e-3, 1001});
        if (f < min_f) {
            min_f = f;
            argmin = l;
        }
    }
    CHECK(std::abs(argmin - 1.0) <= 1e-3 + 1e-12);
    CHECK(min_f < xy::fidelity_analytic({1.0, 0.9, 1001}, {1.0, 0.901, 1001}));
}

TEST_CASE("qgt: step-too-large signal on orthogonal neighbors")
{
    geom::StateMap discontinuous = [](const VectorXd& eta) -> VectorXcd {
        VectorXcd v(2);
        if (eta[0] < 0.5)
            v << 1.0, 0.0;
        else
            v << 0.0, 1.0;
        return v;
    };
    VectorXd eta(1);
    eta << 0.5 - 1e-6;
    CHECK_THROWS_AS(geom::qgt_numeric(discontinuous, eta), NumericalError);
}

TEST_CASE("validate_tensor flags a broken tensor")
{
    MatrixXcd bad(2, 2);
    bad << cd(1, 0), cd(0, 0.5), cd(0, 0.4), cd(1, 0);
    CHECK_THROWS_AS(geom::validate_tensor(bad), NumericalError);
}
