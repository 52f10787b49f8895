#include "qpt/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpt/errors.hpp"
#include "qpt/tridiag.hpp"

namespace qpt::dicke {

namespace {
constexpr double pi = std::numbers::pi;
}

double DickeParams::lambda_c() const { return std::sqrt(omega * delta_atom / 2.0); }
double DickeParams::big_d() const { return 2.0 * delta_atom / omega; }
double DickeParams::big_l() const { return 2.0 * std::sqrt(2.0) * coupling / omega; }

double DickeParams::alpha() const
{
    double l = big_l();
    return l * l / (2.0 * big_d());
}

void DickeParams::validate() const
{
    if (!(omega > 0) || !(delta_atom > 0))
        throw InvalidParams("omega and delta_atom must be positive");
    if (coupling < 0)
        throw InvalidParams("coupling must be >= 0");
    if (n_qubits < 1)
        throw InvalidParams("n_qubits must be >= 1");
}

DickeParams DickeParams::from_dimensionless(double big_d, double alpha, int n_qubits,
                                            double omega)
{
    if (!(big_d > 0) || alpha < 0)
        throw InvalidParams("need D > 0 and alpha >= 0");
    DickeParams p;
    p.omega = omega;
    p.delta_atom = big_d * omega / 2.0;
    // alpha = (coupling / lambda_c)^2
    p.coupling = std::sqrt(alpha) * std::sqrt(omega * p.delta_atom / 2.0);
    p.n_qubits = n_qubits;
    p.validate();
    return p;
}

double adiabatic_potential(double q, const DickeParams& params)
{
    params.validate();
    const double d = params.big_d();
    const double l = params.big_l();
    const double n = params.n_qubits;
    return 0.5 * params.omega * (q * q - n * std::sqrt(d * d + l * l * q * q / n));
}

namespace {

double auto_q_max(const DickeParams& params)
{
    const double d = params.big_d();
    const double l = params.big_l();
    const double n = params.n_qubits;
    double disc = n * (l * l * l * l / 4.0 - d * d);
    double q_star = disc > 0 && l > 0 ? 2.0 * std::sqrt(disc) / l : 0.0;
    // Near alpha = 1 the harmonic term vanishes and the ground state spreads
    // over the quartic width (8 N D^3 / L^4)^(1/6); the box must cover it.
    double w4 = l > 0 ? std::pow(8.0 * n * d * d * d / (l * l * l * l), 1.0 / 6.0) : 0.0;
    return std::max({8.0, q_star + 8.0, 4.0 * w4 + 8.0});
}

} // namespace

OscillatorGroundState solve_ground_oscillator(const DickeParams& params,
                                              const GridSpec& grid)
{
    params.validate();
    const double q_max = grid.q_max > 0 ? grid.q_max : auto_q_max(params);
    int n = std::max(grid.min_points,
                     static_cast<int>(std::ceil(2.0 * q_max / grid.spacing)) + 1);
    if (n % 2 == 0)
        ++n; // keep a grid point at q = 0 so reflection symmetry is exact
    const double h = 2.0 * q_max / (n - 1);
    const double kin = 0.5 * params.omega / (h * h);

    std::vector<double> q(n), diag(n);
    for (int i = 0; i < n; ++i) {
        q[i] = -q_max + i * h;
        diag[i] = 2.0 * kin + adiabatic_potential(q[i], params);
    }
    std::vector<double> sub(n - 1, -kin);

    auto ground = detail::tridiag_ground(diag, sub);

    // Project onto the even sector: the potential is even and the 1D ground
    // state is nondegenerate, so reflection symmetry is exact.
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        double avg = 0.5 * (ground.vector[i] + ground.vector[j]);
        ground.vector[i] = ground.vector[j] = avg;
    }

    // Normalize as a wavefunction, sum |phi|^2 dq = 1, with a positive bulk sign.
    double norm = 0.0;
    for (double v : ground.vector)
        norm += v * v * h;
    norm = std::sqrt(norm);
    int peak = 0;
    for (int i = 0; i < n; ++i)
        if (std::abs(ground.vector[i]) > std::abs(ground.vector[peak]))
            peak = i;
    double sign = ground.vector[peak] < 0 ? -1.0 : 1.0;
    for (double& v : ground.vector)
        v *= sign / norm;

    if (std::abs(ground.vector.front()) > 1e-8 || std::abs(ground.vector.back()) > 1e-8)
        throw GridError("oscillator box too small: boundary amplitude above 1e-8");

    return {std::move(q), std::move(ground.vector), ground.value, h};
}

DickePhase dicke_phase_finite(const DickeParams& params, const GridSpec& grid)
{
    auto state = solve_ground_oscillator(params, grid);
    const double d = params.big_d();
    const double l = params.big_l();
    const double n = params.n_qubits;
    double sx = 0.0; // each qubit anti-aligned with the effective field
    for (std::size_t i = 0; i < state.grid.size(); ++i) {
        double w = state.amplitudes[i] * state.amplitudes[i] * state.spacing;
        sx -= w * d / std::sqrt(d * d + l * l * state.grid[i] * state.grid[i] / n);
    }
    return {n * pi * (1.0 + sx), sx};
}

double dicke_phase_limit(double alpha)
{
    if (alpha < 0)
        throw InvalidParams("alpha must be >= 0");
    return alpha <= 1.0 ? 0.0 : pi * (1.0 - 1.0 / alpha);
}

} // namespace qpt::dicke
