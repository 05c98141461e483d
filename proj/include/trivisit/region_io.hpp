#pragma once

// SVG and CSV output for region maps.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "regions.hpp"

namespace trivisit {

/// Fill colour for a label. Fixed per label so runs are comparable; ties
/// are drawn dark grey.
inline std::string label_color(const CellLabel& label) {
  if (label.tie()) return "#404040";
  static const std::vector<std::pair<std::string, std::string>> fixed{
      {"LRD", "#1f77b4"}, {"RLD", "#aec7e8"}, {"LDR", "#ff7f0e"}, {"RDL", "#ffbb78"}, {"DLR", "#2ca02c"},
      {"DRL", "#98df8a"}, {"L", "#d62728"},   {"D", "#9467bd"},   {"R", "#8c564b"},   {"A", "#e377c2"},
      {"B", "#7f7f7f"},   {"C", "#bcbd22"},   {"LR", "#17becf"},  {"RL", "#9edae5"},  {"LD", "#c5b0d5"},
      {"DL", "#c49c94"},  {"DR", "#f7b6d2"},  {"RD", "#dbdb8d"},
  };
  const std::string key = label.str();
  for (const auto& [k, c] : fixed)
    if (k == key) return c;
  // FNV-1a for merged classes.
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : key) h = (h ^ ch) * 16777619u;
  std::ostringstream os;
  os << '#' << std::hex << std::setw(6) << std::setfill('0') << (h & 0xffffffu);
  return os.str();
}

/// 1000x1000 SVG of the raster with separator chains drawn on top.
inline void write_svg(std::ostream& os, const RegionMap& map, const std::vector<SeparatorChain>& chains = {}) {
  constexpr double size = 1000.0, margin = 20.0;
  const Triangle& t = map.triangle;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (VertexId v : kVertices) {
    xmin = std::min(xmin, t.vertex(v).x);
    xmax = std::max(xmax, t.vertex(v).x);
    ymin = std::min(ymin, t.vertex(v).y);
    ymax = std::max(ymax, t.vertex(v).y);
  }
  const double scale = (size - 2 * margin) / std::max(xmax - xmin, ymax - ymin);
  const double dx = margin + (size - 2 * margin - (xmax - xmin) * scale) / 2;
  const double dy = margin + (size - 2 * margin - (ymax - ymin) * scale) / 2;
  auto px = [&](Point2 p) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << dx + (p.x - xmin) * scale << ',' << size - dy - (p.y - ymin) * scale;
    return s.str();
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& c : map.cells) {
    const std::string col = label_color(c.label);
    os << "<polygon points=\"" << px(c.corners[0]) << ' ' << px(c.corners[1]) << ' ' << px(c.corners[2])
       << "\" fill=\"" << col << "\" stroke=\"" << col << "\" stroke-width=\"0.3\"><title>" << c.label.str()
       << "</title></polygon>\n";
  }
  for (const auto& ch : chains) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (const Point2& p : ch.sample(32)) os << px(p) << ' ';
    os << "\"><title>" << ch.label << "</title></polyline>\n";
  }
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" << px(t.A()) << ' ' << px(t.B()) << ' '
     << px(t.C()) << "\"/>\n";
  os << "</svg>\n";
}

/// One row per cell: i,j,x,y,label.
inline void write_csv(std::ostream& os, const RegionMap& map) {
  os << "i,j,x,y,label\n";
  os << std::setprecision(17);
  for (const auto& c : map.cells) os << c.i << ',' << c.j << ',' << c.center.x << ',' << c.center.y << ',' << c.label.str() << '\n';
}

}  // namespace trivisit
