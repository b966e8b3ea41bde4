#include "hullborne/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hullborne {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<SvgSeries>& series,
                          int width, int height) {
    const double ml = 60, mr = 20, mt = 36, mb = 44;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
    double y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (!(x0 < x1)) { x0 -= 1.0; x1 += 1.0; }
    if (!(y0 < y1)) { y0 -= 1.0; y1 += 1.0; }
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return mt + (1.0 - (y - y0) / (y1 - y0)) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(width / 2.0) + "\" y=\"20\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" + title + "</text>\n";
    // Axes with a few ticks.
    out += "<g stroke=\"#333\" fill=\"none\"><path d=\"M" + fmt(ml) + " " + fmt(mt) + " V" +
           fmt(mt + ph) + " H" + fmt(ml + pw) + "\"/></g>\n";
    for (int i = 0; i <= 4; ++i) {
        double xv = x0 + (x1 - x0) * i / 4.0;
        double yv = y0 + (y1 - y0) * i / 4.0;
        out += "<text x=\"" + fmt(px(xv)) + "\" y=\"" + fmt(mt + ph + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
               fmt(xv) + "</text>\n";
        out += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(py(yv) + 3) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
               fmt(yv) + "</text>\n";
    }
    out += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(height - 8.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           x_label + "</text>\n";
    out += "<text x=\"14\" y=\"" + fmt(mt + ph / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 14 " + fmt(mt + ph / 2) + ")\">" + y_label + "</text>\n";

    int li = 0;
    for (const auto& s : series) {
        if (s.points.empty()) continue;
        std::string d = "M";
        for (auto [x, y] : s.points) d += fmt(px(x)) + " " + fmt(py(y)) + " L";
        d.resize(d.size() - 2);
        out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + fmt(ml + pw - 8) + "\" y=\"" + fmt(mt + 16 + 14 * li) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" +
               s.color + "\">" + s.label + "</text>\n";
        ++li;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hullborne
