#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace cti {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct PlotLabels {
    std::string title;
    std::string x_axis;
    std::string y_axis;
};

/// Writes a self-contained SVG line chart (one polyline per series, axes,
/// tick labels, legend) plus a sibling .csv of the plotted points.
/// Output is byte-identical across runs for identical input.
void emit_plot(const std::vector<PlotSeries>& series, const std::filesystem::path& svg_path,
               const PlotLabels& labels);

} // namespace cti
