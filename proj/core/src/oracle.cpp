#include "qpt/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "qpt/errors.hpp"

namespace qpt::oracle {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using std::complex;

constexpr double pi = std::numbers::pi;
constexpr int max_ed_sites = 11;

double wrap_phase(double x)
{
    double w = std::remainder(x, 2.0 * pi);
    return w <= -pi ? w + 2.0 * pi : w;
}

void check_ed_size(const xy::XYParams& params)
{
    params.validate();
    if (params.n_sites > max_ed_sites)
        throw InvalidParams("dense diagonalization capped at N = " +
                            std::to_string(max_ed_sites) + " sites");
}

// Phase so that the first component of magnitude above 1e-8 is real positive.
void fix_phase(VectorXcd& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v[i]);
        if (mag > 1e-8) {
            v *= std::conj(v[i]) / mag;
            return;
        }
    }
}

// Builds H_phi dense. Basis convention: bit j set means spin down, so
// sigma^z_j |s> = +|s> on a clear bit. The rotation around z maps
//   sigma^x -> cos(phi) sigma^x - sin(phi) sigma^y,
//   sigma^y -> cos(phi) sigma^y + sin(phi) sigma^x,
// so the bond operators stay two-site products of rotated x/y Paulis.
MatrixXcd build_hamiltonian(const xy::XYParams& params, double phi)
{
    const int n = params.n_sites;
    const std::size_t dim = std::size_t{1} << n;
    const double c = std::cos(phi);
    const double s = std::sin(phi);

    MatrixXcd h = MatrixXcd::Zero(dim, dim);
    const complex<double> imag_unit(0.0, 1.0);

    auto bit = [](std::size_t state, int j) { return (state >> j) & 1u; };

    for (std::size_t state = 0; state < dim; ++state) {
        // field term: sigma^z_j |s> = (+1 for up, -1 for down)|s>
        double zsum = 0.0;
        for (int j = 0; j < n; ++j)
            zsum += bit(state, j) ? -1.0 : 1.0;
        h(state, state) += -params.lambda * zsum;

        for (int j = 0; j < n; ++j) {
            int jp = (j + 1) % n;
            std::size_t flipped = state ^ ((std::size_t{1} << j) | (std::size_t{1} << jp));
            // sigma^x|b> = |1-b>;  sigma^y|b> = i(-1)^b |1-b>  (b = 1 for down)
            complex<double> ax_j = 1.0, ax_jp = 1.0;
            complex<double> ay_j = bit(state, j) ? -imag_unit : imag_unit;
            complex<double> ay_jp = bit(state, jp) ? -imag_unit : imag_unit;
            // rotated operators
            complex<double> rx_j = c * ax_j - s * ay_j;
            complex<double> rx_jp = c * ax_jp - s * ay_jp;
            complex<double> ry_j = c * ay_j + s * ax_j;
            complex<double> ry_jp = c * ay_jp + s * ax_jp;
            complex<double> amp = -0.5 * (1.0 + params.gamma) * rx_j * rx_jp
                                  - 0.5 * (1.0 - params.gamma) * ry_j * ry_jp;
            h(flipped, state) += amp;
        }
    }
    return h;
}

std::vector<std::size_t> sector_states(int n, int parity)
{
    std::vector<std::size_t> idx;
    const std::size_t dim = std::size_t{1} << n;
    idx.reserve(dim / 2);
    for (std::size_t s = 0; s < dim; ++s) {
        int p = std::popcount(s) % 2 == 0 ? 1 : -1;
        if (p == parity)
            idx.push_back(s);
    }
    return idx;
}

std::pair<double, VectorXcd> sector_ground(const xy::XYParams& params, double phi,
                                           int parity)
{
    check_ed_size(params);
    if (parity != 1 && parity != -1)
        throw InvalidParams("parity must be +1 or -1");
    MatrixXcd h = build_hamiltonian(params, phi);
    auto idx = sector_states(params.n_sites, parity);
    MatrixXcd block(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            block(a, b) = h(idx[a], idx[b]);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(block);
    VectorXcd full = VectorXcd::Zero(h.rows());
    for (std::size_t a = 0; a < idx.size(); ++a)
        full[idx[a]] = solver.eigenvectors().col(0)[a];
    fix_phase(full);
    return {solver.eigenvalues()[0], full};
}

} // namespace

double wilson_loop_phase(const std::vector<Eigen::VectorXcd>& loop_states)
{
    if (loop_states.size() < 3)
        throw InvalidParams("loop needs at least 3 states");
    double angle = 0.0;
    for (std::size_t j = 0; j < loop_states.size(); ++j) {
        const auto& a = loop_states[j];
        const auto& b = loop_states[(j + 1) % loop_states.size()];
        complex<double> ov = a.dot(b);
        if (std::abs(ov) < 1e-14)
            throw NumericalError("orthogonal neighbors in Wilson loop");
        angle += std::arg(ov);
    }
    return wrap_phase(angle);
}

double per_mode_wilson_loop(double cos_theta, int steps)
{
    if (steps < 100)
        throw InvalidParams("per-mode loop needs at least 100 steps");
    if (std::abs(cos_theta) > 1.0)
        throw InvalidParams("|cos theta| must be <= 1");
    const double theta = std::acos(cos_theta);
    const complex<double> minus_i(0.0, -1.0);
    std::vector<VectorXcd> states;
    states.reserve(steps);
    for (int j = 0; j < steps; ++j) {
        double phi = pi * j / steps;
        VectorXcd v(2);
        v[0] = std::cos(0.5 * theta);
        v[1] = minus_i * std::exp(complex<double>(0.0, 2.0 * phi)) * std::sin(0.5 * theta);
        states.push_back(std::move(v));
    }
    return wilson_loop_phase(states);
}

Eigen::MatrixXcd spin_chain_hamiltonian(const xy::XYParams& params, double phi)
{
    check_ed_size(params);
    return build_hamiltonian(params, phi);
}

Eigen::VectorXd parity_diagonal(int n_sites)
{
    const std::size_t dim = std::size_t{1} << n_sites;
    VectorXd p(dim);
    for (std::size_t s = 0; s < dim; ++s)
        p[s] = std::popcount(s) % 2 == 0 ? 1.0 : -1.0;
    return p;
}

Eigen::VectorXcd spin_chain_ed_ground(const xy::XYParams& params, double phi)
{
    check_ed_size(params);
    MatrixXcd h = build_hamiltonian(params, phi);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
    VectorXcd ground = solver.eigenvectors().col(0);
    fix_phase(ground);
    return ground;
}

Eigen::VectorXcd spin_chain_ed_ground_sector(const xy::XYParams& params, double phi,
                                             int parity)
{
    return sector_ground(params, phi, parity).second;
}

double spin_chain_sector_energy(const xy::XYParams& params, double phi, int parity)
{
    return sector_ground(params, phi, parity).first;
}

double discrete_berry_phase(const xy::XYParams& params, int phi_steps)
{
    check_ed_size(params);
    if (phi_steps < 8)
        throw InvalidParams("need at least 8 phi steps");
    std::vector<VectorXcd> states;
    states.reserve(phi_steps);
    for (int j = 0; j < phi_steps; ++j)
        states.push_back(spin_chain_ed_ground_sector(params, pi * j / phi_steps, -1));
    return wilson_loop_phase(states);
}

MeanFieldResult dicke_meanfield_oracle(double big_d, double big_l)
{
    if (!(big_d > 0))
        throw InvalidParams("D must be positive");
    auto energy = [=](double u) { return u - std::sqrt(big_d * big_d + big_l * big_l * u); };
    // bracket past the analytic minimum scale, then golden-section minimize
    double hi = std::max(1.0, big_l * big_l) * 4.0 + 4.0;
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.0, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = energy(c), fd = energy(d);
    while (b - a > 1e-12 * hi) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = energy(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = energy(d);
        }
    }
    double u = 0.5 * (a + b);
    // parabolic polish: golden section alone stalls ~sqrt(eps) off the minimum
    for (double h : {1e-4, 1e-6}) {
        double fm = energy(u - h), f0 = energy(u), fp = energy(u + h);
        double curv = fm - 2.0 * f0 + fp;
        if (curv > 0)
            u += 0.5 * h * (fm - fp) / curv;
    }
    if (u < 0 || energy(0.0) <= energy(u))
        u = 0.0; // normal phase: boundary minimum
    MeanFieldResult result;
    result.alpha = big_l * big_l / (2.0 * big_d);
    result.u_star = u;
    result.sigma_x = -big_d / std::sqrt(big_d * big_d + big_l * big_l * u);
    return result;
}

} // namespace qpt::oracle
