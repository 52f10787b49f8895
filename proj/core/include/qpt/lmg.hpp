#pragma once

#include <vector>

#include "qpt/scaling.hpp"

namespace qpt::lmg {

struct LMGParams {
    double gamma;  // anisotropy, in [0, 1)
    double field;  // transverse field h, >= 0
    int n_spins;   // >= 2
    void validate() const;
};

// Bogoliubov transformation data at the semiclassical angle.
struct BogoliubovParams {
    double theta;   // semiclassical rotation angle
    double delta;   // Delta = sin^2 th - (gamma + cos^2 th)/2 + h cos th
    double gamma_b; // Gamma = (gamma - cos^2 th)/4
    double tanh2x;  // 2 Gamma / Delta, in (-1, 1) away from h = 1
    double t;       // tanh^2 x, in [0, 1)
};

// arccos(h) below h = 1, zero above (validated against the mean-field
// minimum of the classical energy).
double semiclassical_angle(double h);

// Throws SingularInput at h = 1 where tanh 2x = -1.
BogoliubovParams bogoliubov_params(const LMGParams& params);

// c_n = (2n-1)!!/(2n)!! by the recursion c_0 = 1, c_n = c_{n-1}(2n-1)/(2n).
double mode_coefficient(int n);

// Ground-state geometric phase of Eq-type
//   pi [1 - (sum 2n c_n t^n) / (sum c_n t^n)],  n = 0..floor(N/2),
// the common t^{-1} of the printed sums cancelled. Returns pi exactly at
// t = 0; unwrapped (grows like -N near the h = 1 divergence).
double lmg_phase(const LMGParams& params);

// Linear fit of beta_g(N) against N just above the critical field.
scaling::ScalingFit lmg_size_scaling(double gamma, double h_near_1,
                                     const std::vector<int>& sizes);

} // namespace qpt::lmg
