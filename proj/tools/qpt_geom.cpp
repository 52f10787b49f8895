// qpt-geom: geometric phases and quantum-phase-transition scaling for the
// XY chain, Dicke, LMG and central-probe-qubit models.
//
// Subcommands:
//   sweep    parameter grids -> CSV (or SVG via --format svg)
//   scaling  finite-size-scaling pipeline -> JSON report
//   oracle   brute-force validation suite -> pass/fail table
//   plot     sweep CSV -> standalone SVG
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpt/errors.hpp"
#include "qpt/oracle_suite.hpp"
#include "qpt/plot_svg.hpp"
#include "qpt/scaling_report.hpp"
#include "qpt/sweep.hpp"
#include "qpt/toml_lite.hpp"

namespace {

using namespace qpt;

std::vector<int> parse_sizes(const std::string& spec)
{
    std::vector<int> sizes;
    std::string item;
    std::istringstream is(spec);
    while (std::getline(is, item, ',')) {
        if (item.empty())
            continue;
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidParams("bad size list entry '" + item + "'");
        }
    }
    if (sizes.empty())
        throw InvalidParams("empty size list");
    return sizes;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidParams("cannot open output path: " + path);
    out << content;
    if (!out)
        throw NumericalError("write failed: " + path);
}

struct CommonArgs {
    std::string config_file;
    std::string out;
    std::string format = "csv";
    int threads = 0;
    std::string gamma;
    std::string lambda_range;
    std::string sizes;
};

// Apply config-file values first; flags set on the command line win.
void merge_toml(const cli::TomlTable& toml, const CLI::App* cmd,
                const std::string& key, const std::string& flag,
                std::string& target)
{
    auto it = toml.find(key);
    if (it != toml.end() && cmd->count(flag) == 0)
        target = it->second.as_string();
}

cli::TomlTable load_config(const std::string& path)
{
    if (path.empty())
        return {};
    return cli::parse_toml_file(path);
}

int run_sweep_cmd(const CLI::App* cmd, const CommonArgs& common,
                  std::string model_arg, std::string alpha_range,
                  std::string h_range, double dicke_d, double mu, double nu,
                  double eta)
{
    auto toml = load_config(common.config_file);
    std::string model = model_arg, gamma = common.gamma;
    std::string lambda_range = common.lambda_range, sizes = common.sizes;
    std::string out = common.out, format = common.format;
    merge_toml(toml, cmd, "model", "--model", model);
    merge_toml(toml, cmd, "gamma", "--gamma", gamma);
    merge_toml(toml, cmd, "lambda_range", "--lambda-range", lambda_range);
    merge_toml(toml, cmd, "alpha_range", "--alpha-range", alpha_range);
    merge_toml(toml, cmd, "h_range", "--h-range", h_range);
    merge_toml(toml, cmd, "sizes", "--sizes", sizes);
    merge_toml(toml, cmd, "out", "--out", out);
    merge_toml(toml, cmd, "format", "--format", format);

    cli::SweepConfig config;
    config.model = cli::parse_model(model);
    if (config.model == cli::Model::Lmg)
        config.gamma_range = cli::Range::singleton(0.0);
    if (!gamma.empty())
        config.gamma_range = cli::Range::parse(gamma);
    if (!lambda_range.empty())
        config.lambda_range = cli::Range::parse(lambda_range);
    if (!alpha_range.empty())
        config.alpha_range = cli::Range::parse(alpha_range);
    if (!h_range.empty())
        config.h_range = cli::Range::parse(h_range);
    if (!sizes.empty())
        config.sizes = parse_sizes(sizes);
    config.dicke_d = dicke_d;
    config.mu = mu;
    config.nu = nu;
    config.eta = eta;
    config.threads = common.threads;

    cli::Format fmt = cli::parse_format(format);
    std::string csv = cli::sweep_csv(config);
    if (fmt == cli::Format::Csv) {
        write_output(out, csv);
    } else if (fmt == cli::Format::Svg) {
        std::istringstream is(csv);
        write_output(out, cli::render_plot_csv(is));
    } else {
        throw InvalidParams("sweep supports csv or svg output");
    }
    return 0;
}

int run_scaling_cmd(const CLI::App* cmd, const CommonArgs& common,
                    std::string model_arg, double mu, double nu, double eta)
{
    auto toml = load_config(common.config_file);
    std::string model = model_arg, gamma = common.gamma, sizes = common.sizes;
    std::string out = common.out;
    merge_toml(toml, cmd, "model", "--model", model);
    merge_toml(toml, cmd, "gamma", "--gamma", gamma);
    merge_toml(toml, cmd, "sizes", "--sizes", sizes);
    merge_toml(toml, cmd, "out", "--out", out);

    cli::ScalingConfig config;
    config.model = cli::parse_model(model);
    if (!gamma.empty())
        config.gamma = std::stod(gamma);
    if (!sizes.empty())
        config.sizes = parse_sizes(sizes);
    config.mu = mu;
    config.nu = nu;
    config.eta = eta;
    config.threads = common.threads;

    auto report = cli::run_scaling(config);
    write_output(out, cli::scaling_report_json(report));
    return 0;
}

int run_oracle_cmd(const CommonArgs& common)
{
    cli::OracleConfig config;
    if (!common.sizes.empty())
        config.sizes = parse_sizes(common.sizes);
    for (int n : config.sizes)
        if (n > 11)
            throw InvalidParams("oracle ED sizes are capped at N = 11");
    auto checks = cli::run_oracle(config);
    std::string report = cli::format_oracle_report(checks);
    write_output(common.out, report);
    return cli::all_pass(checks) ? 0 : 2;
}

int run_plot_cmd(const std::string& input, const std::string& out,
                 const std::string& ycol)
{
    std::ifstream in(input);
    if (!in)
        throw InvalidParams("cannot open input CSV: " + input);
    std::string svg = cli::render_plot_csv(in, ycol);
    write_output(out, svg);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometric phases and quantum-phase-transition scaling"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string model = "xy";
    std::string alpha_range, h_range;
    double dicke_d = 10.0, mu = 0.1, nu = 2.0, eta = 0.5;
    std::string plot_input, plot_ycol;

    auto add_common = [&](CLI::App* cmd, bool with_ranges) {
        cmd->add_option("--config", common.config_file, "TOML config file (flags win)");
        cmd->add_option("--out", common.out, "output path (default stdout)");
        cmd->add_option("--threads", common.threads,
                        "worker threads (default: QPT_GEOM_THREADS or hardware)");
        cmd->add_option("--sizes", common.sizes, "comma-separated system sizes");
        cmd->add_option("--gamma", common.gamma, "anisotropy (value or a:b:steps)");
        if (with_ranges)
            cmd->add_option("--lambda-range", common.lambda_range,
                            "field grid a:b:steps");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/SVG");
    add_common(sweep, true);
    sweep->add_option("--model", model, "xy|dicke|lmg|probe");
    sweep->add_option("--format", common.format, "csv|svg");
    sweep->add_option("--alpha-range", alpha_range, "Dicke alpha grid a:b:steps");
    sweep->add_option("--h-range", h_range, "LMG field grid a:b:steps");
    sweep->add_option("--dicke-d", dicke_d, "Dicke D = 2 Delta / omega");
    sweep->add_option("--mu", mu, "probe qubit z field");
    sweep->add_option("--nu", nu, "probe qubit x field");
    sweep->add_option("--eta", eta, "probe-ring coupling");

    CLI::App* scaling = app.add_subcommand("scaling", "finite-size-scaling report (JSON)");
    add_common(scaling, false);
    scaling->add_option("--model", model, "xy|probe");
    scaling->add_option("--mu", mu, "probe qubit z field");
    scaling->add_option("--nu", nu, "probe qubit x field");
    scaling->add_option("--eta", eta, "probe-ring coupling");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force validation suite");
    add_common(oracle, false);

    CLI::App* plot = app.add_subcommand("plot", "render a sweep CSV as SVG");
    plot->add_option("input", plot_input, "sweep CSV path")->required();
    plot->add_option("--out", common.out, "output SVG path (default stdout)");
    plot->add_option("--ycol", plot_ycol, "column to plot (default: last)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(sweep, common, model, alpha_range, h_range,
                                 dicke_d, mu, nu, eta);
        if (scaling->parsed())
            return run_scaling_cmd(scaling, common, model, mu, nu, eta);
        if (oracle->parsed())
            return run_oracle_cmd(common);
        if (plot->parsed())
            return run_plot_cmd(plot_input, common.out, plot_ycol);
    } catch (const qpt::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qpt::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
