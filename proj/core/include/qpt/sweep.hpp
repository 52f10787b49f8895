#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpt::cli {

enum class Model { Xy, Dicke, Lmg, Probe };
enum class Format { Csv, Json, Svg };

Model parse_model(const std::string& name);
Format parse_format(const std::string& name);
std::string model_name(Model model);

// Inclusive linear grid with `steps` points. "a:b:steps" parses to a range;
// a bare number is a singleton.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    static Range parse(const std::string& spec);
    static Range singleton(double v) { return {v, v, 1}; }
    std::vector<double> values() const;
    void validate() const;
};

// Threads resolved from the QPT_GEOM_THREADS environment variable, falling
// back to the hardware concurrency. Grid outputs do not depend on it.
int default_threads();

struct SweepConfig {
    Model model = Model::Xy;
    Range lambda_range{0.0, 2.0, 41};  // xy, probe
    Range gamma_range{1.0, 1.0, 1};    // xy, probe, lmg
    Range alpha_range{0.0, 3.0, 61};   // dicke
    Range h_range{0.5, 1.5, 100};      // lmg (default grid avoids h = 1)
    double dicke_d = 10.0;
    double mu = 0.1;
    double nu = 2.0;
    double eta = 0.5;
    std::vector<int> sizes; // empty = per-model default
    int threads = 0;        // 0 = default_threads()

    std::vector<int> effective_sizes() const;
    void validate() const;
};

// Writes the sweep as CSV: header row, then rows in row-major grid order
// (size, then gamma/alpha, then the swept field), floats with 17 significant
// digits. Byte-identical across runs and thread counts.
void run_sweep(const SweepConfig& config, std::ostream& out);
std::string sweep_csv(const SweepConfig& config);

} // namespace qpt::cli
