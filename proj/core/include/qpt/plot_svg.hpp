#pragma once

#include <iosfwd>
#include <string>

namespace qpt::cli {

// Renders a sweep CSV (any of the four model schemas) as a standalone SVG:
// one polyline per series, axes with tick labels, legend. The x column is
// the swept field of the schema (lambda, alpha or h); y defaults to the
// last column or is chosen by name. Deterministic bytes for fixed input.
// Throws InvalidParams on schema mismatch or when no data rows survive.
std::string render_plot_csv(std::istream& csv, const std::string& y_column = "");

} // namespace qpt::cli
