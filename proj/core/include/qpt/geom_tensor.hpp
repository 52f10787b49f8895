#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace qpt::geom {

// Map from a parameter point to the (normalized) ground state.
using StateMap = std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>;

// Full spectral decomposition at a parameter point: energies ascending,
// states column-wise orthonormal.
struct SpectralDecomposition {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd states;
};
using SpectralModel = std::function<SpectralDecomposition(const Eigen::VectorXd&)>;

// Partial derivatives of the Hamiltonian, one matrix per manifold coordinate.
using HamiltonianGradient =
    std::function<std::vector<Eigen::MatrixXcd>(const Eigen::VectorXd&)>;

// Berry curvature of the ground state by the spectral sum
//   V_{mu nu} = Im sum_{n != g} <g|d_mu H|n><n|d_nu H|g> / (E_n - E_g)^2,
// returned as the antisymmetric matrix over manifold coordinates. Equals
// Im Q of the quantum geometric tensor. Throws SingularInput when the
// ground state is degenerate (gap below 1e-10).
Eigen::MatrixXd berry_curvature_sum(const SpectralModel& model,
                                    const Eigen::VectorXd& eta,
                                    const HamiltonianGradient& grad_h);

struct QgtOptions {
    double step = 1e-5;
    // Recompute at half step and require agreement below 1e-6.
    bool richardson_check = false;
};

// Quantum geometric tensor by gauge-fixed central differences:
//   Q_{mu nu} = <d_mu psi|d_nu psi> - <d_mu psi|psi><psi|d_nu psi>,
// every stencil state phase-rotated so its overlap with the center state is
// real positive.
Eigen::MatrixXcd qgt_numeric(const StateMap& state_map, const Eigen::VectorXd& eta,
                             const QgtOptions& options = {});

// |<psi(eta1)|psi(eta2)>|.
double fidelity(const StateMap& state_map, const Eigen::VectorXd& eta1,
                const Eigen::VectorXd& eta2);

// Hermiticity / positivity checks of a computed tensor; throws NumericalError.
void validate_tensor(const Eigen::MatrixXcd& q);

} // namespace qpt::geom
