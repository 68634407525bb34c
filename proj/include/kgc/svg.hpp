#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kgc/scan.hpp"

namespace kgc {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG line chart, one polyline plus markers per series.
void write_svg(std::ostream& os, const Plot& plot);

/// Plot of scan rows: C_FS against Z for fig1-style scans (single state),
/// zeta against n otherwise, one series per (Z, l) or (model, state).
/// Error rows are skipped.
Plot plot_scan(const std::vector<ScanRow>& rows, const std::string& title);

}  // namespace kgc
