#include "delone/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace delone {

std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> header)
    : os_(os), columns_(header.size()) {
  if (header.empty()) throw std::invalid_argument("CsvWriter: empty header");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os_ << ',';
    os_ << format_sig17(values[i]);
  }
  os_ << '\n';
}

void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& title, int width, int height) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  const double ml = 60, mr = 20, mt = 40, mb = 40;  // margins
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  // axes
  os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
     << mt + ph << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
     << "\" stroke=\"black\"/>\n";
  // axis extent labels
  os << "<text x=\"" << ml << "\" y=\"" << height - 12
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_sig17(xmin)
     << "</text>\n";
  os << "<text x=\"" << ml + pw << "\" y=\"" << height - 12
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_sig17(xmax) << "</text>\n";
  os << "<text x=\"8\" y=\"" << mt + ph << "\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_sig17(ymin) << "</text>\n";
  os << "<text x=\"8\" y=\"" << mt + 12
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_sig17(ymax)
     << "</text>\n";

  int li = 0;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) os << ' ';
      os << px(s.x[i]) << ',' << py(s.y[i]);
    }
    os << "\"/>\n";
    if (!s.label.empty()) {
      os << "<text x=\"" << ml + pw - 6 << "\" y=\"" << mt + 16 + 16 * li
         << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
         << s.color << "\">" << s.label << "</text>\n";
      ++li;
    }
  }
  os << "</svg>\n";
}

}  // namespace delone
