#include "kgc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

namespace kgc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    } else if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

// Roughly five round tick values covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& os, const Plot& plot) {
  Range xr;
  Range yr;
  for (const PlotSeries& s : plot.series) {
    for (const auto& [x, y] : s.points) {
      xr.add(x);
      yr.add(y);
    }
  }
  xr.pad();
  yr.pad();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : ticks(xr.lo, xr.hi)) {
    os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << num(px(t))
       << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>"
       << "<text x=\"" << num(px(t)) << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
  }
  for (double t : ticks(yr.lo, yr.hi)) {
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py(t)) << "\" x2=\"" << kLeft
       << "\" y2=\"" << num(py(t)) << "\" stroke=\"black\"/>"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py(t) + 4)
       << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  os << "<text transform=\"translate(18," << kTop + ph / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(plot.y_label) << "</text>\n";

  std::size_t index = 0;
  for (const PlotSeries& s : plot.series) {
    const char* color = kColors[index % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) os << num(px(x)) << ',' << num(py(y)) << ' ';
    os << "\"/>\n";
    for (const auto& [x, y] : s.points) {
      os << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\""
         << color << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(index);
    os << "<line x1=\"" << kWidth - kRight + 15 << "\" y1=\"" << ly << "\" x2=\""
       << kWidth - kRight + 35 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/><text x=\"" << kWidth - kRight + 40 << "\" y=\"" << ly + 4
       << "\">" << escape(s.label) << "</text>\n";
    ++index;
  }
  os << "</svg>\n";
}

Plot plot_scan(const std::vector<ScanRow>& rows, const std::string& title) {
  Plot plot;
  plot.title = title;
  std::vector<ScanRow> ok;
  std::ranges::copy_if(rows, std::back_inserter(ok), [](const ScanRow& r) { return r.ok(); });

  const bool single_state =
      std::ranges::all_of(ok, [&](const ScanRow& r) {
        return r.n == ok.front().n && r.l == ok.front().l && r.m == ok.front().m;
      });
  if (ok.empty() || single_state) {
    plot.x_label = "Z";
    plot.y_label = "C_FS";
    std::map<std::string, PlotSeries> by_model;
    for (const ScanRow& r : ok) {
      if (!r.C_FS) continue;
      PlotSeries& s = by_model[to_string(r.model)];
      s.label = to_string(r.model);
      s.points.emplace_back(r.Z, *r.C_FS);
    }
    for (auto& [key, s] : by_model) plot.series.push_back(std::move(s));
    return plot;
  }

  const bool have_zeta = std::ranges::any_of(ok, [](const ScanRow& r) { return r.zeta_FS.has_value(); });
  plot.x_label = "n";
  plot.y_label = have_zeta ? "zeta_FS" : "C_FS";
  std::map<std::tuple<std::string, double, int, int>, PlotSeries> grouped;
  for (const ScanRow& r : ok) {
    // zeta is shared by both model rows of a point; take it once.
    if (have_zeta && r.model != Model::kg) continue;
    const std::optional<double>& y = have_zeta ? r.zeta_FS : r.C_FS;
    if (!y) continue;
    const std::string model = have_zeta ? "" : to_string(r.model);
    PlotSeries& s = grouped[{model, r.Z, r.l, r.m}];
    if (s.label.empty()) {
      s.label = (model.empty() ? "" : model + " ") + "Z=" + num(r.Z) + " l=" + std::to_string(r.l);
      if (r.m != 0) s.label += " m=" + std::to_string(r.m);
    }
    s.points.emplace_back(r.n, *y);
  }
  for (auto& [key, s] : grouped) plot.series.push_back(std::move(s));
  return plot;
}

}  // namespace kgc
