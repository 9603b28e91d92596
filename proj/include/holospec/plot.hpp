#pragma once

#include <span>
#include <string>
#include <vector>

namespace holospec {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f4fd8";
  bool markers = false;  ///< circles at each sample
  bool dashed = false;
};

/// Self-contained SVG line chart with a legend and min/max axis labels.
std::string render_svg(const std::string& title, const std::string& x_label,
                       std::span<const PlotSeries> series);

/// Red truth line, blue estimate line with circles.
PlotSeries truth_series(std::string name, std::vector<double> x, std::vector<double> y);
PlotSeries estimate_series(std::string name, std::vector<double> x, std::vector<double> y);

}  // namespace holospec
