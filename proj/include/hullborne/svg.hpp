#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hullborne {

// Minimal SVG line plots; CSV stays the canonical output.
struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    std::vector<std::pair<double, double>> points;
};

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<SvgSeries>& series,
                          int width = 720, int height = 440);

}  // namespace hullborne
