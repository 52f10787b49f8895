#include "qpt/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "qpt/dicke.hpp"
#include "qpt/errors.hpp"
#include "qpt/lmg.hpp"
#include "qpt/probe_qubit.hpp"
#include "qpt/xy_chain.hpp"

namespace qpt::cli {

namespace {

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_int(int v) { return std::to_string(v); }

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    const int workers =
        static_cast<int>(std::min(static_cast<std::size_t>(threads), n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers)
                    body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace

Model parse_model(const std::string& name)
{
    if (name == "xy")
        return Model::Xy;
    if (name == "dicke")
        return Model::Dicke;
    if (name == "lmg")
        return Model::Lmg;
    if (name == "probe")
        return Model::Probe;
    throw InvalidParams("unknown model '" + name + "' (expected xy|dicke|lmg|probe)");
}

Format parse_format(const std::string& name)
{
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    if (name == "svg")
        return Format::Svg;
    throw InvalidParams("unknown format '" + name + "' (expected csv|json|svg)");
}

std::string model_name(Model model)
{
    switch (model) {
    case Model::Xy: return "xy";
    case Model::Dicke: return "dicke";
    case Model::Lmg: return "lmg";
    case Model::Probe: return "probe";
    }
    return "?";
}

Range Range::parse(const std::string& spec)
{
    Range r;
    auto first = spec.find(':');
    if (first == std::string::npos) {
        try {
            r.lo = r.hi = std::stod(spec);
        } catch (const std::exception&) {
            throw InvalidParams("bad range '" + spec + "'");
        }
        r.steps = 1;
        return r;
    }
    auto second = spec.find(':', first + 1);
    if (second == std::string::npos)
        throw InvalidParams("range must be a:b:steps, got '" + spec + "'");
    try {
        r.lo = std::stod(spec.substr(0, first));
        r.hi = std::stod(spec.substr(first + 1, second - first - 1));
        r.steps = std::stoi(spec.substr(second + 1));
    } catch (const std::exception&) {
        throw InvalidParams("bad range '" + spec + "'");
    }
    if (r.steps < 2)
        throw InvalidParams("range '" + spec + "' needs at least 2 steps");
    r.validate();
    return r;
}

void Range::validate() const
{
    if (steps < 1)
        throw InvalidParams("range step count must be >= 1");
    if (steps == 1 && lo != hi)
        throw InvalidParams("a single-step range must have lo == hi");
    if (steps > 1 && !(hi > lo))
        throw InvalidParams("range needs hi > lo");
}

std::vector<double> Range::values() const
{
    validate();
    std::vector<double> v;
    v.reserve(steps);
    if (steps == 1) {
        v.push_back(lo);
        return v;
    }
    for (int i = 0; i < steps; ++i)
        v.push_back(lo + (hi - lo) * i / (steps - 1));
    return v;
}

int default_threads()
{
    if (const char* env = std::getenv("QPT_GEOM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<int> SweepConfig::effective_sizes() const
{
    if (!sizes.empty())
        return sizes;
    switch (model) {
    case Model::Xy: return {1001};
    case Model::Dicke: return {32};
    case Model::Lmg: return {200};
    case Model::Probe: return {501};
    }
    return {};
}

void SweepConfig::validate() const
{
    lambda_range.validate();
    gamma_range.validate();
    alpha_range.validate();
    h_range.validate();
    for (int n : effective_sizes()) {
        if (n < 1)
            throw InvalidParams("sizes must be positive");
        if ((model == Model::Xy || model == Model::Probe) && n % 2 == 0)
            throw InvalidParams("xy/probe sizes must be odd, got " + std::to_string(n));
    }
    if (model == Model::Dicke && !(dicke_d > 0))
        throw InvalidParams("Dicke D must be positive");
}

void run_sweep(const SweepConfig& config, std::ostream& out)
{
    config.validate();
    const int threads = config.threads > 0 ? config.threads : default_threads();
    const auto sizes = config.effective_sizes();

    std::vector<std::string> rows;
    std::string header;

    switch (config.model) {
    case Model::Xy: {
        header = "gamma,lambda,n,beta_g,dbeta_dlambda";
        auto gammas = config.gamma_range.values();
        auto lambdas = config.lambda_range.values();
        rows.resize(sizes.size() * gammas.size() * lambdas.size());
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            std::size_t li = i % lambdas.size();
            std::size_t gi = (i / lambdas.size()) % gammas.size();
            std::size_t ni = i / (lambdas.size() * gammas.size());
            xy::XYParams p{gammas[gi], lambdas[li], sizes[ni]};
            double beta = xy::ground_phase_finite(p).beta_g;
            double deriv = xy::phase_derivative_finite(p);
            rows[i] = fmt17(p.gamma) + "," + fmt17(p.lambda) + "," + fmt_int(p.n_sites) +
                      "," + fmt17(beta) + "," + fmt17(deriv);
        });
        break;
    }
    case Model::Dicke: {
        header = "D,alpha,n,beta_over_n";
        auto alphas = config.alpha_range.values();
        rows.resize(sizes.size() * alphas.size());
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            std::size_t ai = i % alphas.size();
            std::size_t ni = i / alphas.size();
            auto params = dicke::DickeParams::from_dimensionless(config.dicke_d,
                                                                 alphas[ai], sizes[ni]);
            auto phase = dicke::dicke_phase_finite(params);
            rows[i] = fmt17(config.dicke_d) + "," + fmt17(alphas[ai]) + "," +
                      fmt_int(sizes[ni]) + "," + fmt17(phase.beta_g / sizes[ni]);
        });
        break;
    }
    case Model::Lmg: {
        header = "gamma,h,n,beta_g";
        auto gammas = config.gamma_range.values();
        auto fields = config.h_range.values();
        rows.resize(sizes.size() * gammas.size() * fields.size());
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            std::size_t hi = i % fields.size();
            std::size_t gi = (i / fields.size()) % gammas.size();
            std::size_t ni = i / (fields.size() * gammas.size());
            lmg::LMGParams p{gammas[gi], fields[hi], sizes[ni]};
            rows[i] = fmt17(p.gamma) + "," + fmt17(p.field) + "," + fmt_int(p.n_spins) +
                      "," + fmt17(lmg::lmg_phase(p));
        });
        break;
    }
    case Model::Probe: {
        header = "mu,nu,eta,gamma,lambda,n,beta_g,dbeta_dlambda";
        auto gammas = config.gamma_range.values();
        auto lambdas = config.lambda_range.values();
        rows.resize(sizes.size() * gammas.size() * lambdas.size());
        parallel_for(rows.size(), threads, [&](std::size_t i) {
            std::size_t li = i % lambdas.size();
            std::size_t gi = (i / lambdas.size()) % gammas.size();
            std::size_t ni = i / (lambdas.size() * gammas.size());
            probe::ProbeParams p{config.mu, config.nu, config.eta,
                                 {gammas[gi], lambdas[li], sizes[ni]}};
            double beta = probe::probe_phase(p).beta_g;
            double deriv = probe::probe_derivative(p);
            rows[i] = fmt17(p.mu) + "," + fmt17(p.nu) + "," + fmt17(p.eta) + "," +
                      fmt17(gammas[gi]) + "," + fmt17(lambdas[li]) + "," +
                      fmt_int(sizes[ni]) + "," + fmt17(beta) + "," + fmt17(deriv);
        });
        break;
    }
    }

    out << header << "\n";
    for (const auto& row : rows)
        out << row << "\n";
}

std::string sweep_csv(const SweepConfig& config)
{
    std::ostringstream os;
    run_sweep(config, os);
    return os.str();
}

} // namespace qpt::cli
