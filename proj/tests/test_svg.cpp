#include <fstream>
#include <sstream>
#include <string>

#include "coneval/errors.hpp"
#include "coneval/svg.hpp"
#include "doctest.h"

using namespace coneval;
using nlohmann::json;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& pin) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(pin); at != std::string::npos;
       at = hay.find(pin, at + pin.size())) {
    ++n;
  }
  return n;
}

void check_svg_golden(const std::string& name, const std::string& actual) {
  std::string path = std::string(GOLDEN_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << actual;
    return;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == actual);
}

}  // namespace

TEST_CASE("decimal formatting is exact integer arithmetic") {
  CHECK(format_decimal(Rational(0), 2) == "0.00");
  CHECK(format_decimal(Rational(7), 3) == "7.000");
  CHECK(format_decimal(Rational(1, 3), 2) == "0.33");
  CHECK(format_decimal(Rational(-1, 3), 2) == "-0.33");
  CHECK(format_decimal(Rational(2, 3), 2) == "0.67");
  CHECK(format_decimal(Rational(5, 2), 0) == "3");
  CHECK(format_decimal(Rational(-5, 2), 0) == "-3");
  CHECK(format_decimal(Rational(1, 200), 2) == "0.01");
  CHECK(format_decimal(Rational(-1, 200), 2) == "-0.01");
  CHECK(format_decimal(Rational(1, 500), 2) == "0.00");
  CHECK(format_decimal(Rational(-1, 500), 2) == "0.00");
  CHECK(format_decimal(Rational(2399, 100), 1) == "24.0");
}

TEST_CASE("box parsing") {
  Box b = parse_box("4");
  CHECK(b.xmin == Rational(-4));
  CHECK(b.xmax == Rational(4));
  CHECK(b.ymin == Rational(-4));
  CHECK(b.ymax == Rational(4));
  Box c = parse_box("-1,2,-3,5/2");
  CHECK(c.xmin == Rational(-1));
  CHECK(c.xmax == Rational(2));
  CHECK(c.ymin == Rational(-3));
  CHECK(c.ymax == Rational(5, 2));
  CHECK_THROWS_AS(parse_box("0"), UsageError);
  CHECK_THROWS_AS(parse_box("-2"), UsageError);
  CHECK_THROWS_AS(parse_box("1,2"), UsageError);
  CHECK_THROWS_AS(parse_box("4,-4,1,2"), UsageError);
  CHECK_THROWS_AS(parse_box("1,2,3,3"), UsageError);
}

TEST_CASE("palette serialization") {
  Palette p;
  p.cell_fill = "#123456";
  json j = palette_to_json(p);
  Palette q = palette_from_json(j);
  CHECK(palette_to_json(q).dump() == j.dump());

  Palette defaults = palette_from_json(json::object());
  CHECK(palette_to_json(defaults).dump() == palette_to_json(Palette{}).dump());

  json partial = {{"wall", "#000000"}};
  Palette r = palette_from_json(partial);
  CHECK(r.wall == "#000000");
  CHECK(r.background == Palette{}.background);

  CHECK_THROWS_AS(palette_from_json(json{{"wall", 3}}), UsageError);
  CHECK_THROWS_AS(palette_from_json(json::array()), UsageError);
}

TEST_CASE("region rendering is deterministic and structured") {
  Cone wedge = Cone::from_vrep(
      2,
      {QVector{Rational(1), Rational(0)}, QVector{Rational(1), Rational(1)}},
      {});
  QVector y{Rational(2), Rational(1)};
  CellDecomposition dec = gamma_region(wedge, y);
  REQUIRE(!dec.cells.empty());

  Box box = parse_box("4");
  Palette palette;
  std::string svg = render_region_svg(wedge, y, dec, box, palette, true);
  CHECK(svg == render_region_svg(wedge, y, dec, box, palette, true));

  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<polygon") >= 1);
  CHECK(count_occurrences(svg, "stroke-dasharray") >= 1);
  CHECK(count_occurrences(svg, "<circle") >= 2);  // origin and parameter
  CHECK(count_occurrences(svg, "<ellipse") == 1);
  CHECK(svg.find(palette.cell_fill) != std::string::npos);

  std::string no_ball = render_region_svg(wedge, y, dec, box, palette, false);
  CHECK(count_occurrences(no_ball, "<ellipse") == 0);

  check_svg_golden("wedge_region.svg", svg);
}

TEST_CASE("rendering rejects non-planar input") {
  Cone ray = Cone::from_vrep(3, {QVector{Rational(1), Rational(0), Rational(0)}},
                             {});
  QVector y{Rational(1), Rational(0), Rational(0)};
  CellDecomposition dec = gamma_region(ray, y);
  CHECK_THROWS_AS(render_region_svg(ray, y, dec, parse_box("4"), Palette{},
                                    false),
                  UsageError);
}
