#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pumpsim {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained SVG line chart. Output is deterministic for identical
// inputs; metadata pairs are embedded as comments so tools can read facts
// like pulse counts back out of the image.
void write_svg_plot(
    const std::string& path, const std::string& title,
    const std::string& x_label, const std::string& y_label,
    const std::vector<PlotSeries>& series,
    const std::vector<std::pair<std::string, std::string>>& metadata = {});

}  // namespace pumpsim
