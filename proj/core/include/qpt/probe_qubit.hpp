#pragma once

#include <vector>

#include "qpt/xy_chain.hpp"

namespace qpt::probe {

// Central test qubit homogeneously coupled to an XY ring. The ring seen by
// the qubit's ground branch is an XY chain with the field shifted by
// delta = eta cos(theta_0) / N.
struct ProbeParams {
    double mu;  // test-qubit z field
    double nu;  // test-qubit x field
    double eta; // qubit-ring coupling
    xy::XYParams ring;

    double theta0() const;      // atan2(nu, mu)
    double delta_shift() const; // eta cos(theta0) / N
    double gap_shift() const;   // sqrt(mu^2 + nu^2) / 2
    void validate() const;
};

enum class Branch { Ground, Excited };

// Mode data of one effective-chain branch: eps_k = lambda - cos phi_k + k_a d
// with k_g = -k_e = 1, and cos theta_k = eps_k / Lambda_k. (Note the sign
// convention is opposite to the bare chain's (cos phi - lambda)/Lambda.)
struct BranchAngle {
    int k;
    double phi;
    double epsilon;
    double lambda_k;
    double cos_theta;
};

std::vector<BranchAngle> branch_angles(const ProbeParams& params, Branch branch);

// f(lambda, gamma, N) = (1/N) sum_k cos theta_k^{(g)} with the branch shift
// delta included; |f| <= 1/2 always.
double f_function(double lambda, double gamma, int n_sites, double delta_shift);

// N -> infinity form, (1/2pi) integral of (lambda - cos phi)/Lambda_phi;
// the O(1/N) shift drops out.
double f_function_limit(double lambda, double gamma);

// Test-qubit ground-state phase pi (1 + s/sqrt(s^2 + nu^2)), s = mu + 4 eta f.
xy::PhaseResult probe_phase(const ProbeParams& params);

// Same with f from the thermodynamic-limit integral.
xy::PhaseResult probe_phase_limit(double mu, double nu, double eta,
                                  double gamma, double lambda);

// gamma = 0 closed form with f = 1/2 - acos(lambda)/pi below lambda = 1 and
// f = 1/2 above, written out as printed (coupling entering as 2 eta [...]).
xy::PhaseResult probe_phase_xx_limit(double mu, double nu, double eta, double lambda);

// d beta / d lambda by the chain rule through f; throws SingularInput on a
// gapless branch mode.
double probe_derivative(const ProbeParams& params);

double probe_derivative_limit(double mu, double nu, double eta,
                              double gamma, double lambda);

} // namespace qpt::probe
