#include "coneval/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "coneval/errors.hpp"
#include "coneval/indicator.hpp"

namespace coneval {

using nlohmann::json;

namespace {

void read_color(const json& j, const char* key, std::string* out) {
  if (!j.contains(key)) return;
  if (!j[key].is_string()) {
    throw UsageError(std::string("palette entry \"") + key +
                     "\" must be a string");
  }
  *out = j[key].get<std::string>();
}

}  // namespace

Palette palette_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("palette must be a JSON object");
  Palette p;
  read_color(j, "background", &p.background);
  read_color(j, "frame", &p.frame);
  read_color(j, "cone_edge", &p.cone_edge);
  read_color(j, "wall", &p.wall);
  read_color(j, "cell_fill", &p.cell_fill);
  read_color(j, "cell_fill_opacity", &p.cell_fill_opacity);
  read_color(j, "origin_mark", &p.origin_mark);
  read_color(j, "parameter_mark", &p.parameter_mark);
  read_color(j, "ball", &p.ball);
  return p;
}

json palette_to_json(const Palette& p) {
  json j;
  j["background"] = p.background;
  j["frame"] = p.frame;
  j["cone_edge"] = p.cone_edge;
  j["wall"] = p.wall;
  j["cell_fill"] = p.cell_fill;
  j["cell_fill_opacity"] = p.cell_fill_opacity;
  j["origin_mark"] = p.origin_mark;
  j["parameter_mark"] = p.parameter_mark;
  j["ball"] = p.ball;
  return j;
}

Box parse_box(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  Box box;
  if (parts.size() == 1) {
    Rational m = Rational::parse(parts[0]);
    if (m.sign() <= 0) throw UsageError("box half-width must be positive");
    box = {-m, m, -m, m};
  } else if (parts.size() == 4) {
    box = {Rational::parse(parts[0]), Rational::parse(parts[1]),
           Rational::parse(parts[2]), Rational::parse(parts[3])};
  } else {
    throw UsageError("box must be \"m\" or \"xmin,xmax,ymin,ymax\"");
  }
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax)) {
    throw UsageError("box must have positive width and height");
  }
  return box;
}

std::string format_decimal(const Rational& q, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round (num/den)*scale half away from zero using only integers.
  mpz_class twice = 2 * q.num() * scale;
  mpz_class den2 = 2 * q.den();
  mpz_class rounded = twice >= 0 ? mpz_class((twice + q.den()) / den2)
                                 : mpz_class((twice - q.den()) / den2);
  bool neg = rounded < 0;
  mpz_class a = abs(rounded);
  mpz_class ip = a / scale;
  mpz_class fp = a % scale;
  std::string out = neg && a != 0 ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

namespace {

constexpr int kCanvas = 480;

struct Mapper {
  Box box;
  Rational px, py;  // pixels per world unit

  explicit Mapper(const Box& b)
      : box(b),
        px(Rational(kCanvas) / (b.xmax - b.xmin)),
        py(Rational(kCanvas) / (b.ymax - b.ymin)) {}

  // Screen y grows downward, world y grows upward.
  QVector to_screen(const QVector& p) const {
    return QVector{(p[0] - box.xmin) * px, (box.ymax - p[1]) * py};
  }
};

std::string coord(const Rational& q) { return format_decimal(q, 2); }

// Clips the parametrized line p0 + t*d to the box.  The t-interval starts
// as [tlo, +inf) when hi is unset, or (-inf, +inf) when both are unset.
std::optional<std::pair<QVector, QVector>> clip_to_box(
    const QVector& p0, const QVector& d, std::optional<Rational> tlo,
    std::optional<Rational> thi, const Box& box) {
  if (d.is_zero()) return std::nullopt;
  // Each constraint reads alpha + beta*t >= 0.
  const std::pair<Rational, Rational> constraints[4] = {
      {p0[0] - box.xmin, d[0]},
      {box.xmax - p0[0], -d[0]},
      {p0[1] - box.ymin, d[1]},
      {box.ymax - p0[1], -d[1]},
  };
  for (const auto& [alpha, beta] : constraints) {
    if (beta.is_zero()) {
      if (alpha.sign() < 0) return std::nullopt;
      continue;
    }
    Rational bound = -alpha / beta;
    if (beta.sign() > 0) {
      if (!tlo || *tlo < bound) tlo = bound;
    } else {
      if (!thi || bound < *thi) thi = bound;
    }
  }
  if (!tlo || !thi || *thi < *tlo) return std::nullopt;
  return std::make_pair(p0 + *tlo * d, p0 + *thi * d);
}

void emit_line(std::ostringstream& out, const Mapper& m, const QVector& a,
               const QVector& b, const std::string& stroke,
               const char* width, const char* dash) {
  QVector sa = m.to_screen(a);
  QVector sb = m.to_screen(b);
  out << "  <line x1=\"" << coord(sa[0]) << "\" y1=\"" << coord(sa[1])
      << "\" x2=\"" << coord(sb[0]) << "\" y2=\"" << coord(sb[1])
      << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"";
  if (dash[0] != '\0') out << " stroke-dasharray=\"" << dash << "\"";
  out << "/>\n";
}

void emit_mark(std::ostringstream& out, const Mapper& m, const QVector& p,
               const std::string& fill) {
  QVector s = m.to_screen(p);
  out << "  <circle cx=\"" << coord(s[0]) << "\" cy=\"" << coord(s[1])
      << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
}

bool closure_holds(const AffineCondition& cond, const QVector& p) {
  Rational s = dot(cond.normal, p) - cond.offset;
  return cond.rel == Rel::Eq ? s.is_zero() : s.sign() >= 0;
}

// Vertices of the closure of a bounded two-dimensional cell: all pairwise
// intersections of the conditions' boundary lines that satisfy every
// condition's closure.
std::vector<QVector> cell_vertices(const GeneralizedPolyhedron& cell) {
  const auto& conds = cell.conditions();
  std::vector<QVector> verts;
  auto consider = [&](const QVector& p) {
    for (const auto& c : conds) {
      if (!closure_holds(c, p)) return;
    }
    for (const auto& v : verts) {
      if (v == p) return;
    }
    verts.push_back(p);
  };
  for (std::size_t i = 0; i < conds.size(); ++i) {
    for (std::size_t j = i + 1; j < conds.size(); ++j) {
      QMatrix a = QMatrix::from_rows({conds[i].normal, conds[j].normal});
      QVector b{conds[i].offset, conds[j].offset};
      if (auto p = solve(a, b)) consider(*p);
    }
  }
  if (verts.size() < 3) return verts;
  QVector centroid(2);
  for (const auto& v : verts) centroid += v;
  centroid = (Rational(1) / Rational(static_cast<long>(verts.size()))) *
             centroid;
  auto half = [](const QVector& v) {
    int s = v[1].sign();
    if (s != 0) return s > 0 ? 0 : 1;
    return v[0].sign() > 0 ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(),
            [&](const QVector& lhs, const QVector& rhs) {
              QVector va = lhs - centroid;
              QVector vb = rhs - centroid;
              int ha = half(va);
              int hb = half(vb);
              if (ha != hb) return ha < hb;
              Rational cross = va[0] * vb[1] - va[1] * vb[0];
              if (!cross.is_zero()) return cross.sign() > 0;
              return dot(va, va) < dot(vb, vb);
            });
  return verts;
}

void emit_cell(std::ostringstream& out, const Mapper& m,
               const GeneralizedPolyhedron& cell, const Palette& palette) {
  std::vector<QVector> verts = cell_vertices(cell);
  if (verts.empty()) return;
  if (verts.size() == 1) {
    QVector s = m.to_screen(verts[0]);
    out << "  <circle cx=\"" << coord(s[0]) << "\" cy=\"" << coord(s[1])
        << "\" r=\"3\" fill=\"" << palette.cell_fill << "\" fill-opacity=\""
        << palette.cell_fill_opacity << "\"/>\n";
    return;
  }
  if (verts.size() == 2) {
    out << "  <line x1=\"" << coord(m.to_screen(verts[0])[0]) << "\" y1=\""
        << coord(m.to_screen(verts[0])[1]) << "\" x2=\""
        << coord(m.to_screen(verts[1])[0]) << "\" y2=\""
        << coord(m.to_screen(verts[1])[1]) << "\" stroke=\""
        << palette.cell_fill << "\" stroke-width=\"4\" stroke-opacity=\""
        << palette.cell_fill_opacity << "\"/>\n";
    return;
  }
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    QVector s = m.to_screen(verts[i]);
    if (i > 0) out << " ";
    out << coord(s[0]) << "," << coord(s[1]);
  }
  out << "\" fill=\"" << palette.cell_fill << "\" fill-opacity=\""
      << palette.cell_fill_opacity << "\"/>\n";
}

// floor(10^digits * sqrt(v)) for a nonnegative rational v, as a rational,
// using integer square roots only.
Rational sqrt_floor(const Rational& v, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class radicand = v.num() * v.den() * scale * scale;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return Rational(root) / Rational(mpz_class(v.den() * scale));
}

}  // namespace

std::string render_region_svg(const Cone& cone, const QVector& y,
                              const CellDecomposition& dec, const Box& box,
                              const Palette& palette, bool draw_ball) {
  if (cone.ambient_dim() != 2 || y.dim() != 2 || dec.dim != 2) {
    throw UsageError("rendering requires two-dimensional data");
  }
  Mapper m(box);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas
      << " " << kCanvas << "\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" fill=\"" << palette.background << "\" stroke=\""
      << palette.frame << "\" stroke-width=\"1\"/>\n";

  for (const RegionCell& cell : dec.cells) {
    emit_cell(out, m, cell.cell, palette);
  }

  if (draw_ball && !y.is_zero()) {
    // The circle centered at y/2 through 0 and y.
    QVector center{y[0] / Rational(2), y[1] / Rational(2)};
    Rational radius = sqrt_floor(dot(center, center), 4);
    QVector sc = m.to_screen(center);
    out << "  <ellipse cx=\"" << coord(sc[0]) << "\" cy=\"" << coord(sc[1])
        << "\" rx=\"" << coord(radius * m.px) << "\" ry=\""
        << coord(radius * m.py) << "\" fill=\"none\" stroke=\"" << palette.ball
        << "\" stroke-width=\"1.5\"/>\n";
  }

  for (const Wall& wall : dec.walls) {
    if (wall.normal.is_zero()) continue;
    Rational nn = dot(wall.normal, wall.normal);
    QVector p0 = (wall.offset / nn) * wall.normal;
    QVector dir{-wall.normal[1], wall.normal[0]};
    if (auto seg = clip_to_box(p0, dir, std::nullopt, std::nullopt, box)) {
      emit_line(out, m, seg->first, seg->second, palette.wall, "1.5", "6 4");
    }
  }

  QVector origin(2);
  for (const QVector& r : cone.rays()) {
    if (auto seg = clip_to_box(origin, r, Rational(0), std::nullopt, box)) {
      emit_line(out, m, seg->first, seg->second, palette.cone_edge, "2.5", "");
    }
  }
  if (!(cone.is_subspace() && cone.is_full_dim())) {
    for (int i = 0; i < cone.lineality_basis().rows(); ++i) {
      QVector dir = cone.lineality_basis().row(i);
      if (auto seg = clip_to_box(origin, dir, std::nullopt, std::nullopt,
                                 box)) {
        emit_line(out, m, seg->first, seg->second, palette.cone_edge, "2.5",
                  "");
      }
    }
  }

  emit_mark(out, m, origin, palette.origin_mark);
  emit_mark(out, m, y, palette.parameter_mark);
  out << "</svg>\n";
  return out.str();
}

}  // namespace coneval
