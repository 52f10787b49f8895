#pragma once

#include <vector>

namespace qpt::xy {

// Parameters of the periodic XY chain in a transverse field. The chain length
// is restricted to odd N = 2M + 1; even sizes and open boundaries are
// rejected rather than approximated.
struct XYParams {
    double gamma;  // in-plane anisotropy
    double lambda; // transverse field strength
    int n_sites;   // odd, >= 3

    int mode_count() const { return (n_sites - 1) / 2; }
    void validate() const; // throws InvalidParams
};

// Bogoliubov data of one momentum mode, k = 1..M.
struct ModeAngle {
    int k;
    double phi;       // 2 pi k / N
    double lambda_k;  // excitation energy, >= 0
    double cos_theta; // (cos phi - lambda) / lambda_k
    bool gapless;     // lambda_k == 0 (then cos_theta is the gamma->0+ value 0)
};

enum class Method { FiniteSum, Quadrature, ClosedForm };

struct PhaseResult {
    double beta_g;
    Method method;
    bool scaled; // true: mean over modes times pi; false: raw unscaled sum
};

// lambda - cos(phi) evaluated as (lambda - 1) + 2 sin^2(phi/2), which stays
// accurate in the near-critical corner lambda -> 1, phi -> 0.
double lambda_minus_cos(double lambda, double phi);

// Excitation energy Lambda_phi at momentum angle phi.
double excitation_energy(double gamma, double lambda, double phi);

std::vector<ModeAngle> mode_angles(const XYParams& params);

// Ground-state geometric phase (pi/M) sum_k (1 - cos theta_k).
PhaseResult ground_phase_finite(const XYParams& params);

// Unscaled companion, pi * sum_k (1 - cos theta_k); loop-phase comparisons
// against the exact-diagonalization oracle take this mod 2 pi.
PhaseResult ground_phase_raw(const XYParams& params);

// Thermodynamic limit: integral over [0, pi] of (1 - cos theta_phi).
PhaseResult ground_phase_limit(double gamma, double lambda);

// d beta_g / d lambda = (pi/M) sum_k gamma^2 sin^2 phi_k / Lambda_k^3.
// Throws SingularInput if some mode is gapless.
double phase_derivative_finite(const XYParams& params);

// Thermodynamic-limit derivative; throws SingularInput at lambda = 1 for
// gamma != 0 where the integral diverges logarithmically.
double phase_derivative_limit(double gamma, double lambda);

// gamma -> 0+ limit of the phase integral: 2 pi - 2 acos(lambda) for
// lambda <= 1 and 2 pi above. (The branch order follows the quadrature of
// the limit integral.)
PhaseResult xx_limit_phase(double lambda);

// Derivative of the gamma -> 0+ closed form, 2 / sqrt(1 - lambda^2) for
// lambda < 1 and 0 above; throws SingularInput at lambda = 1.
double xx_limit_derivative(double lambda);

// Ground-state overlap between two parameter points of the same chain,
// prod_k |cos((theta_k - theta_k') / 2)|.
double fidelity_analytic(const XYParams& a, const XYParams& b);

} // namespace qpt::xy
