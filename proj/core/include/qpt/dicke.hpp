#pragma once

#include <vector>

namespace qpt::dicke {

// Dicke model of N qubits coupled to one bosonic mode. The dimensionless
// combinations D = 2 Delta / omega, L = 2 sqrt(2) lambda / omega and
// alpha = (lambda / lambda_c)^2 = L^2 / (2 D) drive all results.
struct DickeParams {
    double omega;      // boson frequency, > 0
    double delta_atom; // atomic transition frequency, > 0
    double coupling;   // qubit-boson coupling lambda, >= 0
    int n_qubits;      // >= 1

    double lambda_c() const; // sqrt(omega * delta_atom / 2)
    double big_d() const;    // 2 delta_atom / omega
    double big_l() const;    // 2 sqrt(2) coupling / omega
    double alpha() const;    // L^2 / (2 D)
    void validate() const;

    static DickeParams from_dimensionless(double big_d, double alpha, int n_qubits,
                                          double omega = 1.0);
};

struct GridSpec {
    double q_max = 0.0;     // 0 = derived from the displaced-minimum location
    double spacing = 0.005; // target grid step
    int min_points = 2001;
};

struct OscillatorGroundState {
    std::vector<double> grid;
    std::vector<double> amplitudes; // normalized: sum |phi_i|^2 dq = 1
    double energy;                  // epsilon_0
    double spacing;
};

// Born-Oppenheimer potential (omega/2)(q^2 - N sqrt(D^2 + L^2 q^2 / N)).
double adiabatic_potential(double q, const DickeParams& params);

// Lowest eigenpair of (omega/2)(-d^2/dq^2 + q^2 - N sqrt(D^2 + L^2 q^2/N))
// by second-order central differences. Throws GridError when the box is too
// small for the wavefunction tails.
OscillatorGroundState solve_ground_oscillator(const DickeParams& params,
                                              const GridSpec& grid = {});

struct DickePhase {
    double beta_g;            // N pi (1 + <Jx>/N)
    double jx_mean_per_qubit; // <Jx>/N in [-1, 0)
};

DickePhase dicke_phase_finite(const DickeParams& params, const GridSpec& grid = {});

// Thermodynamic limit: 0 for alpha <= 1, pi (1 - 1/alpha) above.
double dicke_phase_limit(double alpha);

} // namespace qpt::dicke
