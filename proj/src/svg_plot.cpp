#include "cti/svg_plot.hpp"

#include "cti/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cti {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 70.0, kRight = 720.0;   // plot area x
constexpr double kTop = 50.0, kBottom = 510.0;   // plot area y

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& svg_path,
               const PlotLabels& labels) {
    if (series.empty()) {
        throw std::invalid_argument("emit_plot: no series given");
    }
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    bool first = true;
    for (const auto& s : series) {
        if (s.points.empty()) {
            throw std::invalid_argument("emit_plot: series '" + s.label + "' is empty");
        }
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            } else {
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    // pad degenerate ranges so single points still map somewhere sensible
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft); };
    auto sy = [&](double y) { return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(labels.title)
        << "</text>\n";

    // axes
    svg << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(kRight)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\"/>\n";

    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / ticks;
        const double gx = sx(fx);
        svg << "<line x1=\"" << px(gx) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(gx)
            << "\" y2=\"" << px(kBottom + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(gx) << "\" y=\"" << px(kBottom + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(fx) << "</text>\n";
        const double fy = y_min + (y_max - y_min) * i / ticks;
        const double gy = sy(fy);
        svg << "<line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(gy) << "\" x2=\"" << px(kLeft)
            << "\" y2=\"" << px(gy) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(gy + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(fy) << "</text>\n";
    }
    svg << "<text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"" << px(kHeight - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(labels.x_axis) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << px((kTop + kBottom) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << px((kTop + kBottom) / 2) << ")\">"
        << xml_escape(labels.y_axis) << "</text>\n";

    const std::size_t n_colors = sizeof(kPalette) / sizeof(kPalette[0]);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % n_colors];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first_pt = true;
        for (const auto& [x, y] : series[i].points) {
            if (!first_pt) svg << ' ';
            first_pt = false;
            svg << px(sx(x)) << ',' << px(sy(y));
        }
        svg << "\"/>\n";
        const double ly = kTop + 18.0 * static_cast<double>(i);
        svg << "<line x1=\"" << px(kRight + 12) << "\" y1=\"" << px(ly) << "\" x2=\""
            << px(kRight + 34) << "\" y2=\"" << px(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << px(kRight + 40) << "\" y=\"" << px(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(series[i].label)
            << "</text>\n";
    }
    svg << "</svg>\n";
    write_file_atomic(svg_path, svg.str());

    // sibling CSV of the plotted points, long format
    std::vector<std::vector<Cell>> rows;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            rows.push_back({s.label, x, y});
        }
    }
    std::filesystem::path csv_path = svg_path;
    csv_path.replace_extension(".csv");
    write_table_file(csv_path, {"series", "x", "y"}, rows);
}

} // namespace cti
