#include "qpt/geom_tensor.hpp"

#include <cmath>
#include <complex>

#include "qpt/errors.hpp"

namespace qpt::geom {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

constexpr double degeneracy_gap = 1e-10;

// Rotate the global phase of psi so <center|psi> is real positive.
VectorXcd gauge_fix(const VectorXcd& center, const VectorXcd& psi)
{
    std::complex<double> ov = center.dot(psi);
    double mag = std::abs(ov);
    if (mag < 1e-12)
        throw NumericalError("vanishing overlap in gauge fixing: step too large");
    return psi * (std::conj(ov) / mag);
}

MatrixXcd qgt_once(const StateMap& state_map, const VectorXd& eta, double step)
{
    const auto dims = eta.size();
    VectorXcd center = state_map(eta);
    center.normalize();

    std::vector<VectorXcd> derivs(dims);
    for (Eigen::Index mu = 0; mu < dims; ++mu) {
        VectorXd up = eta, dn = eta;
        up[mu] += step;
        dn[mu] -= step;
        VectorXcd plus = gauge_fix(center, state_map(up).normalized());
        VectorXcd minus = gauge_fix(center, state_map(dn).normalized());
        derivs[mu] = (plus - minus) / (2.0 * step);
    }

    MatrixXcd q(dims, dims);
    for (Eigen::Index mu = 0; mu < dims; ++mu)
        for (Eigen::Index nu = 0; nu < dims; ++nu)
            q(mu, nu) = derivs[mu].dot(derivs[nu]) -
                        derivs[mu].dot(center) * center.dot(derivs[nu]);
    return q;
}

} // namespace

Eigen::MatrixXd berry_curvature_sum(const SpectralModel& model,
                                    const Eigen::VectorXd& eta,
                                    const HamiltonianGradient& grad_h)
{
    SpectralDecomposition sd = model(eta);
    const auto dim = sd.energies.size();
    if (dim < 2)
        throw InvalidParams("spectral model must have at least two levels");
    if (sd.energies[1] - sd.energies[0] < degeneracy_gap)
        throw SingularInput("energy levels are cross: degenerate ground state");
    if (((sd.states.adjoint() * sd.states) - MatrixXcd::Identity(dim, dim)).norm() >
        1e-10 * std::sqrt(static_cast<double>(dim)))
        throw InvalidParams("spectral model states are not orthonormal");

    auto grads = grad_h(eta);
    const auto coords = static_cast<Eigen::Index>(grads.size());
    const VectorXcd ground = sd.states.col(0);

    // <g|d_mu H|n> for all excited n at once
    MatrixXcd bra(coords, dim - 1);
    for (Eigen::Index mu = 0; mu < coords; ++mu)
        bra.row(mu) = ground.adjoint() * grads[mu] * sd.states.rightCols(dim - 1);

    MatrixXd curvature = MatrixXd::Zero(coords, coords);
    for (Eigen::Index mu = 0; mu < coords; ++mu) {
        for (Eigen::Index nu = mu + 1; nu < coords; ++nu) {
            std::complex<double> sum = 0.0;
            for (Eigen::Index n = 1; n < dim; ++n) {
                double gap = sd.energies[n] - sd.energies[0];
                sum += bra(mu, n - 1) * std::conj(bra(nu, n - 1)) / (gap * gap);
            }
            curvature(mu, nu) = sum.imag();
            curvature(nu, mu) = -sum.imag();
        }
    }
    return curvature;
}

Eigen::MatrixXcd qgt_numeric(const StateMap& state_map, const Eigen::VectorXd& eta,
                             const QgtOptions& options)
{
    if (!(options.step > 0))
        throw InvalidParams("step must be positive");
    MatrixXcd q = qgt_once(state_map, eta, options.step);
    if (options.richardson_check) {
        MatrixXcd q_half = qgt_once(state_map, eta, 0.5 * options.step);
        if ((q - q_half).cwiseAbs().maxCoeff() > 1e-6)
            throw NumericalError("qgt stencil not converged: halved step moved Q by > 1e-6");
        q = q_half;
    }
    return q;
}

double fidelity(const StateMap& state_map, const Eigen::VectorXd& eta1,
                const Eigen::VectorXd& eta2)
{
    VectorXcd a = state_map(eta1).normalized();
    VectorXcd b = state_map(eta2).normalized();
    return std::abs(a.dot(b));
}

void validate_tensor(const Eigen::MatrixXcd& q)
{
    if ((q - q.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw NumericalError("geometric tensor not Hermitian within 1e-8");
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        if (std::abs(q(i, i).imag()) > 1e-8 || q(i, i).real() < -1e-10)
            throw NumericalError("geometric tensor diagonal not real nonnegative");
    }
}

} // namespace qpt::geom
