#include "petruska/io/svg.h"

#include <algorithm>
#include <cstdio>
#include <string>

namespace petruska::io {
namespace {

constexpr const char* kPalette[9] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                     "#a65628", "#f781bf", "#999999", "#17becf"};

constexpr double kSize = 600, kMargin = 40, kLegend = 160;

std::string fmt(const char* f, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const constructions::ConvexFamily& family) {
  const auto& pts = family.points();
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!pts.empty()) {
    minx = maxx = geom::to_double(pts[0].x);
    miny = maxy = geom::to_double(pts[0].y);
  }
  for (const auto& p : pts) {
    minx = std::min(minx, geom::to_double(p.x));
    maxx = std::max(maxx, geom::to_double(p.x));
    miny = std::min(miny, geom::to_double(p.y));
    maxy = std::max(maxy, geom::to_double(p.y));
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  // SVG y grows downward.
  auto sx = [&](const geom::Rat& x) { return kMargin + (geom::to_double(x) - minx) * scale; };
  auto sy = [&](const geom::Rat& y) { return kSize - kMargin - (geom::to_double(y) - miny) * scale; };
  auto xy = [&](const geom::Point& p) { return fmt("%.3f,%.3f", sx(p.x), sy(p.y)); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(static_cast<int>(kSize + kLegend)) + "\" height=\"" +
         std::to_string(static_cast<int>(kSize)) + "\">\n";
  out += "<title>" + escape(family.name()) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto& bodies = family.bodies();
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const char* colour = kPalette[i % 9];
    const auto& ring = bodies[i].ring();
    const std::string id = " id=\"body" + std::to_string(i) + "\"";
    if (bodies[i].dim() == 0) {
      out += "<circle" + id + " cx=\"" + fmt("%.3f", sx(ring[0].x), 0) + "\" cy=\"" +
             fmt("%.3f", sy(ring[0].y), 0) + "\" r=\"7\" fill=\"" + colour +
             "\" fill-opacity=\"0.35\" stroke=\"" + colour + "\"/>\n";
    } else if (bodies[i].dim() == 1) {
      out += "<polyline" + id + " points=\"" + xy(ring.front()) + " " + xy(ring.back()) +
             "\" stroke=\"" + colour + "\" stroke-width=\"4\" stroke-opacity=\"0.6\"/>\n";
    } else {
      std::string poly;
      for (const auto& p : ring) poly += (poly.empty() ? "" : " ") + xy(p);
      out += "<polygon" + id + " points=\"" + poly + "\" fill=\"" + colour +
             "\" fill-opacity=\"0.15\" stroke=\"" + colour + "\"/>\n";
    }
  }

  for (const auto& w : family.witnesses()) {
    const auto& p = pts[w.point];
    std::string label;
    for (int b : w.label) label += (label.empty() ? "" : ",") + std::to_string(b);
    out += "<circle cx=\"" + fmt("%.3f", sx(p.x), 0) + "\" cy=\"" + fmt("%.3f", sy(p.y), 0) +
           "\" r=\"3\" fill=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.3f", sx(p.x) + 5, 0) + "\" y=\"" + fmt("%.3f", sy(p.y) - 5, 0) +
           "\" font-size=\"10\" font-family=\"monospace\">" + label + "</text>\n";
  }

  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const double y = 20 + 16.0 * i;
    out += "<rect x=\"" + fmt("%.0f", kSize + 10, 0) + "\" y=\"" + fmt("%.0f", y, 0) +
           "\" width=\"12\" height=\"12\" fill=\"" + kPalette[i % 9] + "\" fill-opacity=\"0.6\"/>\n";
    out += "<text x=\"" + fmt("%.0f", kSize + 28, 0) + "\" y=\"" + fmt("%.0f", y + 10, 0) +
           "\" font-size=\"11\" font-family=\"monospace\">body " + std::to_string(i) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace petruska::io
