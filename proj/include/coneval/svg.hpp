#pragma once

#include <string>

#include "coneval/gamma.hpp"
#include "json.hpp"

namespace coneval {

// Stroke and fill styles for the region renderer.  The defaults match the
// palette file shipped with the command-line tool; loading a different file
// restyles the output without touching any geometry.
struct Palette {
  std::string background = "#ffffff";
  std::string frame = "#c8c8c8";
  std::string cone_edge = "#1f3a5f";
  std::string wall = "#8a8a8a";
  std::string cell_fill = "#7fb3d5";
  std::string cell_fill_opacity = "0.55";
  std::string origin_mark = "#000000";
  std::string parameter_mark = "#c0392b";
  std::string ball = "#2e8b57";
};

Palette palette_from_json(const nlohmann::json& j);
nlohmann::json palette_to_json(const Palette& p);

// Axis-aligned drawing window in world coordinates.
struct Box {
  Rational xmin, xmax, ymin, ymax;
};

// Accepts either a single positive rational "m" (the window [-m,m] squared)
// or four comma-separated rationals "xmin,xmax,ymin,ymax".
Box parse_box(const std::string& text);

// Fixed-precision decimal rendering of an exact rational, rounded half away
// from zero.  Computed entirely with integer arithmetic.
std::string format_decimal(const Rational& q, int digits);

// Renders a two-dimensional support decomposition: filled cells carrying
// nonzero values, solid cone edges, dashed walls, marks at the origin and at
// the parameter point, and optionally the circle bounding the support.
std::string render_region_svg(const Cone& cone, const QVector& y,
                              const CellDecomposition& dec, const Box& box,
                              const Palette& palette, bool draw_ball);

}  // namespace coneval
