#include "qpt/plot_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "qpt/errors.hpp"

namespace qpt::cli {

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep))
        out.push_back(cell);
    return out;
}

std::string fmt(double v, int prec = 6)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    return buf;
}

std::string fmt_fixed(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                         "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

} // namespace

std::string render_plot_csv(std::istream& csv, const std::string& y_column)
{
    std::string header_line;
    if (!std::getline(csv, header_line))
        throw InvalidParams("empty input: no CSV header");
    if (!header_line.empty() && header_line.back() == '\r')
        header_line.pop_back();
    auto columns = split(header_line, ',');

    static const std::map<std::string, std::string> schema_x = {
        {"gamma,lambda,n,beta_g,dbeta_dlambda", "lambda"},
        {"D,alpha,n,beta_over_n", "alpha"},
        {"gamma,h,n,beta_g", "h"},
        {"mu,nu,eta,gamma,lambda,n,beta_g,dbeta_dlambda", "lambda"},
    };
    auto schema = schema_x.find(header_line);
    if (schema == schema_x.end())
        throw InvalidParams("unrecognized sweep CSV schema: " + header_line);

    const std::string x_name = schema->second;
    const std::string y_name = y_column.empty() ? columns.back() : y_column;
    auto index_of = [&](const std::string& name) {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end())
            throw InvalidParams("no column '" + name + "' in schema");
        return static_cast<std::size_t>(it - columns.begin());
    };
    const std::size_t xi = index_of(x_name);
    const std::size_t yi = index_of(y_name);
    // parameter columns end at "n"; everything after holds values
    const std::size_t last_key = index_of("n");

    // series key = parameter columns except x, preserving file order
    std::vector<std::string> series_order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::string line;
    while (std::getline(csv, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto cells = split(line, ',');
        if (cells.size() != columns.size())
            throw InvalidParams("CSV row width does not match header");
        std::string key;
        for (std::size_t i = 0; i <= last_key; ++i) {
            if (i == xi || i == yi)
                continue;
            if (!key.empty())
                key += " ";
            key += columns[i] + "=" + fmt(std::stod(cells[i]));
        }
        if (!series.count(key))
            series_order.push_back(key);
        series[key].emplace_back(std::stod(cells[xi]), std::stod(cells[yi]));
    }
    if (series.empty())
        throw InvalidParams("no data rows in CSV");

    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    for (const auto& [key, pts] : series)
        for (const auto& [x, y] : pts) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double width = 800, height = 520;
    const double ml = 80, mr = 170, mt = 40, mb = 60;
    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
        << width - mr << "\" y2=\"" << height - mb
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const int n_ticks = 6;
    for (int i = 0; i < n_ticks; ++i) {
        double fx = x_min + (x_max - x_min) * i / (n_ticks - 1);
        double px = sx(fx);
        svg << "<line x1=\"" << fmt_fixed(px) << "\" y1=\"" << height - mb
            << "\" x2=\"" << fmt_fixed(px) << "\" y2=\"" << height - mb + 5
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt_fixed(px) << "\" y=\"" << height - mb + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(fx, 4)
            << "</text>\n";
        double fy = y_min + (y_max - y_min) * i / (n_ticks - 1);
        double py = sy(fy);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt_fixed(py) << "\" x2=\""
            << ml << "\" y2=\"" << fmt_fixed(py) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt_fixed(py + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(fy, 4)
            << "</text>\n";
    }

    // axis labels
    svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 15
        << "\" font-size=\"14\" text-anchor=\"middle\">" << x_name << "</text>\n";
    svg << "<text x=\"20\" y=\"" << (mt + height - mb) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << (mt + height - mb) / 2 << ")\">" << y_name << "</text>\n";

    int color = 0;
    double legend_y = mt + 10;
    for (const auto& key : series_order) {
        const auto& pts = series[key];
        const char* stroke = palette[color % 10];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts)
            svg << fmt_fixed(sx(x)) << "," << fmt_fixed(sy(y)) << " ";
        svg << "\"/>\n";
        svg << "<line x1=\"" << width - mr + 10 << "\" y1=\"" << fmt_fixed(legend_y)
            << "\" x2=\"" << width - mr + 30 << "\" y2=\"" << fmt_fixed(legend_y)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << width - mr + 35 << "\" y=\"" << fmt_fixed(legend_y + 4)
            << "\" font-size=\"11\">" << key << "</text>\n";
        legend_y += 18;
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace qpt::cli
