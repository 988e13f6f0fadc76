#include "tropmat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

constexpr double kSqrt3Half = 0.8660254037844386;
constexpr double kPixelsPerUnit = 120.0;

const char* kPalette[] = {"#bfd7ea", "#f4b8a0", "#c7e8ca", "#f2e2a8",
                          "#d8c6e8", "#f7c8de", "#cfe3f0", "#e8d6b8"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

double to_double(const Rational& r) { return r.convert_to<double>(); }

void require_d3(int d) {
  if (d != 3) {
    throw TropmatError(Errc::unsupported_dimension,
                       "rendering is implemented for d = 3 only");
  }
}

/// CSS class for a cell, keyed by its entry-size pattern (sizes sorted
/// descending), e.g. (12,1) -> "cell-21".
std::string cell_class(const NdType& t) {
  std::vector<int> sizes;
  sizes.reserve(static_cast<size_t>(t.n()));
  for (int i = 0; i < t.n(); ++i) sizes.push_back(mask_card(t.entry(i)));
  std::sort(sizes.rbegin(), sizes.rend());
  std::string out = "cell-";
  for (int s : sizes) out += std::to_string(s);
  return out;
}

std::pair<double, double> centroid(
    const std::vector<std::pair<double, double>>& pts) {
  double cx = 0;
  double cy = 0;
  for (const auto& [x, y] : pts) {
    cx += x;
    cy += y;
  }
  return {cx / static_cast<double>(pts.size()),
          cy / static_cast<double>(pts.size())};
}

std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v + 0.0);  // kill -0
  return buffer;
}

std::string escape_text(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::pair<double, double> project_lattice_point(const LatticePoint& p) {
  const double x2 = static_cast<double>(p.x[1]);
  const double x3 = static_cast<double>(p.x[2]);
  return {x2 + 0.5 * x3, kSqrt3Half * x3};
}

SvgScene render_subdivision(const MixedSubdivision& s, bool labels) {
  require_d3(s.d());
  SvgScene scene;

  std::vector<std::string> classes;
  for (const NdType& cell : s.maximal_cells()) {
    std::vector<std::pair<double, double>> pts;
    for (const LatticePoint& p : cell_vertex_points(cell)) {
      pts.push_back(project_lattice_point(p));
    }
    auto [cx, cy] = centroid(pts);
    std::sort(pts.begin(), pts.end(),
              [cx, cy](const auto& a, const auto& b) {
                return std::atan2(a.second - cy, a.first - cx) <
                       std::atan2(b.second - cy, b.first - cx);
              });
    std::string cls = cell_class(cell);
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) {
      classes.push_back(cls);
    }
    scene.polygons.push_back({std::move(pts), cls});
    if (labels) {
      scene.labels.push_back({cx, cy, cell.to_string()});
    }
  }

  const double stroke = 0.02 * s.n();
  for (size_t k = 0; k < classes.size(); ++k) {
    scene.styles.emplace_back(
        classes[k], std::string("fill:") + kPalette[k % kPaletteSize] +
                        ";stroke:#333;stroke-width:" + format_number(stroke));
  }
  if (labels) {
    scene.styles.emplace_back(
        "label", "font-family:monospace;font-size:" +
                     format_number(0.12 * s.n()) + "px;text-anchor:middle");
  }
  scene.width = kPixelsPerUnit * s.n() + 40;
  scene.height = kPixelsPerUnit * kSqrt3Half * s.n() + 40;
  return scene;
}

SvgScene render_arrangement(const WeightMatrix& w, bool labels) {
  require_d3(w.d());
  SvgScene scene;

  // Apexes in the x_3 = 0 chart, drawn through the plane map
  // x -> x_1*(1,0) + x_2*(-1/2, sqrt(3)/2), which spreads the three
  // ray directions of the polar fan 120 degrees apart.
  auto chart = [](const Rational& x1, const Rational& x2) {
    double u = to_double(x1);
    double v = to_double(x2);
    return std::pair<double, double>{u - 0.5 * v, kSqrt3Half * v};
  };

  std::vector<std::pair<double, double>> apexes;
  for (int i = 0; i < w.n(); ++i) {
    apexes.push_back(chart(w.at(i, 2) - w.at(i, 0), w.at(i, 2) - w.at(i, 1)));
  }

  double spread = 1.0;
  for (const auto& [x, y] : apexes) {
    for (const auto& [x2, y2] : apexes) {
      spread = std::max(spread, std::hypot(x - x2, y - y2));
    }
  }
  const double reach = 1.5 * spread + 1.0;

  // Ray directions in the chart: sectors {2,3}, {1,3}, {1,2}.
  const std::pair<double, double> directions[3] = {
      {1.0, 0.0}, {-0.5, kSqrt3Half}, {-0.5, -kSqrt3Half}};

  for (const auto& [ax, ay] : apexes) {
    scene.markers.push_back({ax, ay, "apex"});
    for (const auto& [dx, dy] : directions) {
      scene.polylines.push_back(
          {{{ax, ay}, {ax + reach * dx, ay + reach * dy}}, "ray"});
    }
  }

  if (labels) {
    for (const NdType& tope : region_topes(realizable_tom(w))) {
      if (auto x = type_point(w, tope, /*strict=*/true)) {
        auto [lx, ly] = chart((*x)[0], (*x)[1]);
        scene.labels.push_back({lx, ly, tope.to_string()});
      }
    }
  }

  const double stroke = 0.015 * reach;
  scene.styles.emplace_back("ray", "stroke:#2b4b6f;stroke-width:" +
                                       format_number(stroke) + ";fill:none");
  scene.styles.emplace_back("apex", "fill:#9e2b25");
  if (labels) {
    scene.styles.emplace_back(
        "label", "font-family:monospace;font-size:" +
                     format_number(0.05 * reach) + "px;text-anchor:middle");
  }
  scene.width = kPixelsPerUnit * spread + 80;
  scene.height = kPixelsPerUnit * spread + 80;
  return scene;
}

std::string to_svg(const SvgScene& scene) {
  // Bounding box over everything drawn; y is flipped at emission so
  // the scene stays in mathematical coordinates.
  double minx = 1e300;
  double miny = 1e300;
  double maxx = -1e300;
  double maxy = -1e300;
  auto grow = [&](double x, double y) {
    minx = std::min(minx, x);
    miny = std::min(miny, y);
    maxx = std::max(maxx, x);
    maxy = std::max(maxy, y);
  };
  for (const SvgPolygon& p : scene.polygons) {
    for (const auto& [x, y] : p.points) grow(x, y);
  }
  for (const SvgPolyline& p : scene.polylines) {
    for (const auto& [x, y] : p.points) grow(x, y);
  }
  for (const SvgMarker& m : scene.markers) grow(m.x, m.y);
  for (const SvgLabel& l : scene.labels) grow(l.x, l.y);
  if (minx > maxx) {
    minx = miny = 0;
    maxx = maxy = 1;
  }
  const double margin = 0.06 * std::max(maxx - minx, maxy - miny) + 0.05;
  minx -= margin;
  maxx += margin;
  miny -= margin;
  maxy += margin;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_number(scene.width) + "\" height=\"" +
         format_number(scene.height) + "\" viewBox=\"" +
         format_number(minx) + " " + format_number(-maxy) + " " +
         format_number(maxx - minx) + " " + format_number(maxy - miny) +
         "\">\n";
  out += "<style>\n";
  for (const auto& [cls, body] : scene.styles) {
    out += "." + cls + " { " + body + "; }\n";
  }
  out += "</style>\n";

  const double marker_radius =
      0.012 * std::max(maxx - minx, maxy - miny);
  for (const SvgPolygon& p : scene.polygons) {
    out += "<polygon class=\"" + p.css_class + "\" points=\"";
    for (size_t k = 0; k < p.points.size(); ++k) {
      if (k > 0) out.push_back(' ');
      out += format_number(p.points[k].first) + "," +
             format_number(-p.points[k].second);
    }
    out += "\"/>\n";
  }
  for (const SvgPolyline& p : scene.polylines) {
    out += "<polyline class=\"" + p.css_class + "\" points=\"";
    for (size_t k = 0; k < p.points.size(); ++k) {
      if (k > 0) out.push_back(' ');
      out += format_number(p.points[k].first) + "," +
             format_number(-p.points[k].second);
    }
    out += "\"/>\n";
  }
  for (const SvgMarker& m : scene.markers) {
    out += "<circle class=\"" + m.css_class + "\" cx=\"" +
           format_number(m.x) + "\" cy=\"" + format_number(-m.y) +
           "\" r=\"" + format_number(marker_radius) + "\"/>\n";
  }
  for (const SvgLabel& l : scene.labels) {
    out += "<text class=\"label\" x=\"" + format_number(l.x) + "\" y=\"" +
           format_number(-l.y) + "\">" + escape_text(l.text) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tropmat
