#pragma once

#include <vector>

#include <Eigen/Core>

#include "qpt/xy_chain.hpp"

namespace qpt::oracle {

// Phase of the discrete closed loop prod_j <psi_j|psi_{j+1 mod n}>, wrapped
// to (-pi, pi]. With this orientation the per-mode loop returns
// pi (1 - cos theta) mod 2 pi.
double wilson_loop_phase(const std::vector<Eigen::VectorXcd>& loop_states);

// Discrete Berry phase of the two-level mode state
//   cos(theta/2) |0> - i e^{2 i phi} sin(theta/2) |1>
// on a uniform phi grid over [0, pi) (the loop closes there since the
// rotated Hamiltonian is pi periodic). steps >= 100 required.
double per_mode_wilson_loop(double cos_theta, int steps);

// Dense rotated XY Hamiltonian H_phi = U_phi^dag H U_phi over 2^N spins,
// periodic boundary. N <= 11 enforced.
Eigen::MatrixXcd spin_chain_hamiltonian(const xy::XYParams& params, double phi);

// Diagonal of the parity operator prod_j sigma^z_j in the computational basis.
Eigen::VectorXd parity_diagonal(int n_sites);

// Dense ground eigenvector of H_phi, deterministic lexicographic phase
// fixing (first component of magnitude above 1e-8 made real positive).
Eigen::VectorXcd spin_chain_ed_ground(const xy::XYParams& params, double phi);

// Lowest eigenvector restricted to one parity sector (parity = +1 or -1) of
// prod sigma^z. The analytic integer-momentum Bogoliubov solution is the
// exact ground state of the parity -1 block; the global ground state may
// live in the other block, where momenta are half-integer shifted.
Eigen::VectorXcd spin_chain_ed_ground_sector(const xy::XYParams& params, double phi,
                                             int parity);

// Lowest eigenvalue of the parity-sector block.
double spin_chain_sector_energy(const xy::XYParams& params, double phi, int parity);

// Wilson loop of the parity -1 sector ground state over phi in [0, pi),
// comparable mod 2 pi against the raw analytic sum pi sum_k (1 - cos theta_k).
double discrete_berry_phase(const xy::XYParams& params, int phi_steps);

// Mean-field minimization of u - sqrt(D^2 + L^2 u) over u >= 0 (u = q^2/N).
struct MeanFieldResult {
    double alpha;   // L^2 / (2 D)
    double sigma_x; // -D / sqrt(D^2 + L^2 u*)
    double u_star;
};
MeanFieldResult dicke_meanfield_oracle(double big_d, double big_l);

} // namespace qpt::oracle
