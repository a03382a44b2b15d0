#pragma once

#include <string>
#include <vector>

namespace dts {

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal static line chart written as a standalone SVG file.
void write_svg_line_chart(const std::string& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series);

}  // namespace dts
