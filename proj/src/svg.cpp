#include "blockseq/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace blockseq::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                               "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string semicircle_path(const Semicircle& s) {
  const double r = (s.b - s.a) / 2.0;
  return "M " + num(s.a) + " 0 A " + num(r) + " " + num(r) + " 0 0 " + (s.upper ? "1" : "0") + " " +
         num(s.b) + " 0";
}

}  // namespace

std::string render_pages(const PagePartition& pages, std::size_t n) {
  const double width = std::max<double>(static_cast<double>(n), 2.0);
  const double panel = width / 2.0 + 1.0;  // room for the tallest arc on each side
  const std::size_t panels = std::max<std::size_t>(pages.pages.size(), 1);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 " << num(-panel) << " " << num(width + 1) << " "
      << num(2 * panel * static_cast<double>(panels)) << "\">\n";
  for (std::size_t i = 0; i < panels; ++i) {
    out << "  <g class=\"page\" transform=\"translate(0 " << num(2 * panel * static_cast<double>(i)) << ")\">\n";
    out << "    <line class=\"spine\" x1=\"1\" y1=\"0\" x2=\"" << num(static_cast<double>(std::max<std::size_t>(n, 1)))
        << "\" y2=\"0\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    for (std::size_t v = 1; v <= n; ++v) {
      out << "    <line class=\"tick\" x1=\"" << v << "\" y1=\"-0.1\" x2=\"" << v
          << "\" y2=\"0.1\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    }
    if (i < pages.pages.size()) {
      const Page& page = pages.pages[i];
      const ArcDrawing d = layout_page(page, n);
      for (std::size_t e = 0; e < d.size(); ++e) {
        const char* color = kPalette[page.edges[e].block % kPalette.size()];
        for (const auto& s : d[e]) {
          out << "    <path d=\"" << semicircle_path(s) << "\" fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"0.03\"/>\n";
        }
      }
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_points(const PointSet& pts, const std::vector<std::vector<std::size_t>>& groups) {
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!pts.empty()) {
    minx = maxx = pts[0].x;
    miny = maxy = pts[0].y;
    for (const auto& p : pts) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double pad = span * 0.05, radius = span * 0.006;
  std::vector<int> owner(pts.size(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t id : groups[g]) {
      if (id < pts.size()) owner[id] = static_cast<int>(g);
    }
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  // y grows upwards in the data, downwards in SVG
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(minx - pad) << " " << num(-maxy - pad) << " "
      << num(maxx - minx + 2 * pad) << " " << num(maxy - miny + 2 * pad) << "\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const char* color = owner[i] < 0 ? "#cccccc" : kPalette[static_cast<std::size_t>(owner[i]) % kPalette.size()];
    out << "  <circle cx=\"" << num(pts[i].x) << "\" cy=\"" << num(-pts[i].y) << "\" r=\"" << num(radius)
        << "\" fill=\"" << color << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace blockseq::svg
