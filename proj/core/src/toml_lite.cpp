#include "qpt/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qpt/errors.hpp"

namespace qpt::cli {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Strip a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& s)
{
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"')
            quoted = !quoted;
        else if (s[i] == '#' && !quoted)
            return s.substr(0, i);
    }
    return s;
}

TomlValue parse_scalar(const std::string& raw)
{
    TomlValue v;
    std::string s = trim(raw);
    if (s.empty())
        throw InvalidParams("empty TOML value");
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw InvalidParams("unterminated string: " + s);
        v.kind = TomlValue::Kind::String;
        v.str = s.substr(1, s.size() - 2);
        return v;
    }
    if (s == "true" || s == "false") {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = s == "true";
        return v;
    }
    try {
        std::size_t used = 0;
        v.num = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        v.kind = TomlValue::Kind::Number;
        return v;
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse TOML value: " + s);
    }
}

TomlValue parse_value(const std::string& raw)
{
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw InvalidParams("unterminated array: " + s);
        TomlValue v;
        v.kind = TomlValue::Kind::Array;
        std::string body = s.substr(1, s.size() - 2);
        std::string item;
        std::istringstream is(body);
        while (std::getline(is, item, ',')) {
            if (trim(item).empty())
                continue;
            v.array.push_back(parse_scalar(item));
        }
        return v;
    }
    return parse_scalar(s);
}

} // namespace

double TomlValue::as_number() const
{
    if (kind != Kind::Number)
        throw InvalidParams("TOML value is not a number");
    return num;
}

std::string TomlValue::as_string() const
{
    if (kind == Kind::String)
        return str;
    if (kind == Kind::Number) {
        std::ostringstream os;
        os << num;
        return os.str();
    }
    throw InvalidParams("TOML value is not a string");
}

std::vector<double> TomlValue::as_number_list() const
{
    std::vector<double> out;
    if (kind == Kind::Number) {
        out.push_back(num);
        return out;
    }
    if (kind != Kind::Array)
        throw InvalidParams("TOML value is not an array");
    for (const auto& v : array)
        out.push_back(v.as_number());
    return out;
}

TomlTable parse_toml_lite(std::istream& in)
{
    TomlTable table;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = trim(strip_comment(line));
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw InvalidParams("bad section header at line " + std::to_string(line_no));
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InvalidParams("expected key = value at line " + std::to_string(line_no));
        std::string key = trim(s.substr(0, eq));
        if (key.empty())
            throw InvalidParams("empty key at line " + std::to_string(line_no));
        if (!section.empty())
            key = section + "." + key;
        table[key] = parse_value(s.substr(eq + 1));
    }
    return table;
}

TomlTable parse_toml_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParams("cannot open config file: " + path);
    return parse_toml_lite(in);
}

} // namespace qpt::cli
