#include "pumpsim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "pumpsim/errors.hpp"

namespace pumpsim {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                         "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
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

}  // namespace

void write_svg_plot(
    const std::string& path, const std::string& title,
    const std::string& x_label, const std::string& y_label,
    const std::vector<PlotSeries>& series,
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  if (series.empty()) {
    fail(ErrorCode::InvalidArgument, "plot needs at least one series");
  }

  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  bool first = true;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      fail(ErrorCode::InvalidArgument,
           "plot series must be non-empty with matching lengths");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        fail(ErrorCode::InvalidArgument, "plot series contain non-finite values");
      }
      if (first) {
        x_min = x_max = s.x[i];
        y_min = y_max = s.y[i];
        first = false;
      } else {
        x_min = std::min(x_min, s.x[i]);
        x_max = std::max(x_max, s.x[i]);
        y_min = std::min(y_min, s.y[i]);
        y_max = std::max(y_max, s.y[i]);
      }
    }
  }
  if (x_max - x_min <= 0.0) x_max = x_min + 1.0;
  if (y_max - y_min <= 0.0) {
    y_max = y_min + 1.0;
    y_min -= 1.0;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + plot_w * (x - x_min) / (x_max - x_min);
  };
  const auto py = [&](double y) {
    return kMarginTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min));
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
         std::to_string(kHeight) + "\">\n";
  for (const auto& [key, value] : metadata) {
    svg += "<!-- meta " + escape(key) + "=" + escape(value) + " -->\n";
  }
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + escape(title) + "</text>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / (kTicks - 1);
    const double fy = y_min + (y_max - y_min) * i / (kTicks - 1);
    const double gx = px(fx);
    const double gy = py(fy);
    svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kMarginTop) +
           "\" x2=\"" + num(gx) + "\" y2=\"" +
           num(kMarginTop + plot_h) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(gy) +
           "\" x2=\"" + num(kMarginLeft + plot_w) + "\" y2=\"" + num(gy) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + num(gx) + "\" y=\"" +
           num(kMarginTop + plot_h + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(fx) + "</text>\n";
    svg += "<text x=\"" + num(kMarginLeft - 6) + "\" y=\"" + num(gy + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(fy) + "</text>\n";
  }
  svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) +
         "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg += ' ';
      svg += num(px(s.x[i]));
      svg += ',';
      svg += num(py(s.y[i]));
    }
    svg += "\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft + 10) + "\" y=\"" +
           num(kMarginTop + 16 + 16 * static_cast<double>(si)) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"";
    svg += color;
    svg += "\">" + escape(s.label) + "</text>\n";
  }

  svg += "<text x=\"" + std::to_string(kWidth / 2) + "\" y=\"" +
         std::to_string(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + std::to_string(kHeight / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 " +
         std::to_string(kHeight / 2) + ")\">" + escape(y_label) + "</text>\n";
  svg += "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open for writing: " + path);
  }
  out << svg;
  if (!out) {
    fail(ErrorCode::IoError, "write failed: " + path);
  }
}

}  // namespace pumpsim
