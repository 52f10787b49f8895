#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qpt::cli {

// Minimal flat TOML subset for run configuration: `key = value` lines with
// strings, numbers, booleans and one-level arrays, plus # comments and
// [section] headers (keys inside flatten to "section.key"). Enough for the
// sweep/scaling configs; full TOML is out of scope.
struct TomlValue {
    enum class Kind { String, Number, Boolean, Array };
    Kind kind = Kind::String;
    std::string str;
    double num = 0.0;
    bool boolean = false;
    std::vector<TomlValue> array;

    double as_number() const;
    std::string as_string() const;
    std::vector<double> as_number_list() const;
};

using TomlTable = std::map<std::string, TomlValue>;

TomlTable parse_toml_lite(std::istream& in);
TomlTable parse_toml_file(const std::string& path);

} // namespace qpt::cli
