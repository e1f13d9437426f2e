#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delone {

/// Deterministic CSV: header row, then rows at 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::vector<std::string> header);

  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
  std::size_t columns_;
};

std::string format_sig17(double v);

/// Minimal SVG 1.1 line plot: one polyline per series over shared axes.
struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
};

void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& title, int width = 720, int height = 480);

}  // namespace delone
