#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropmat/mixsd.hpp"
#include "tropmat/realize.hpp"

namespace tropmat {

/// Display-only scene. The one corner of the library where floating
/// point is allowed.
struct SvgPolygon {
  std::vector<std::pair<double, double>> points;
  std::string css_class;
};

struct SvgPolyline {
  std::vector<std::pair<double, double>> points;
  std::string css_class;
};

struct SvgMarker {
  double x = 0;
  double y = 0;
  std::string css_class;
};

struct SvgLabel {
  double x = 0;
  double y = 0;
  std::string text;
};

struct SvgScene {
  double width = 0;
  double height = 0;
  std::vector<std::pair<std::string, std::string>> styles;  // class, css body
  std::vector<SvgPolygon> polygons;
  std::vector<SvgPolyline> polylines;
  std::vector<SvgMarker> markers;
  std::vector<SvgLabel> labels;
};

/// Lattice points projected by the fixed triangle chart
/// e1 -> (0,0), e2 -> (1,0), e3 -> (1/2, sqrt(3)/2).
std::pair<double, double> project_lattice_point(const LatticePoint& p);

/// One polygon per maximal cell, vertices in boundary order, colors
/// keyed by the pattern of entry sizes. d = 3 only.
SvgScene render_subdivision(const MixedSubdivision& s, bool labels = false);

/// One apex marker and three rays per hyperplane. d = 3 only. With
/// labels, each region tope is annotated at a witness point.
SvgScene render_arrangement(const WeightMatrix& w, bool labels = false);

/// Deterministic, well-formed SVG text.
std::string to_svg(const SvgScene& scene);

}  // namespace tropmat
