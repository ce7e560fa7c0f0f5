#include "coneval/arrangement.hpp"

#include <algorithm>

namespace coneval {

Wall make_wall(const QVector& normal, const Rational& offset) {
  if (normal.is_zero()) throw UsageError("wall normal must be nonzero");
  QVector joint(normal.dim() + 1);
  for (int i = 0; i < normal.dim(); ++i) joint[i] = normal[i];
  joint[normal.dim()] = offset;
  joint = primitive_canonical(joint);
  Wall w;
  w.normal = QVector(normal.dim());
  for (int i = 0; i < normal.dim(); ++i) w.normal[i] = joint[i];
  w.offset = joint[normal.dim()];
  if (w.normal.is_zero()) throw UsageError("wall normal must be nonzero");
  return w;
}

std::vector<Wall> dedupe_walls(std::vector<Wall> walls) {
  auto less = [](const Wall& a, const Wall& b) {
    int c = lex_compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  };
  std::sort(walls.begin(), walls.end(), less);
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

std::vector<ArrangementFace> enumerate_arrangement_faces(
    int dim, const std::vector<Wall>& walls) {
  std::vector<ArrangementFace> faces;
  faces.push_back({{}, GeneralizedPolyhedron::whole_space(dim)});
  for (const Wall& w : walls) {
    if (w.normal.dim() != dim) throw UsageError("wall dimension mismatch");
    AffineCondition above{w.normal, w.offset, Rel::Gt};
    AffineCondition below{-w.normal, -w.offset, Rel::Gt};
    AffineCondition on{w.normal, w.offset, Rel::Eq};
    std::vector<ArrangementFace> next;
    for (auto& f : faces) {
      GeneralizedPolyhedron plus = f.cell;
      plus.add(above);
      GeneralizedPolyhedron minus = f.cell;
      minus.add(below);
      bool has_plus = is_feasible(plus);
      bool has_minus = is_feasible(minus);
      if (has_plus && has_minus) {
        GeneralizedPolyhedron slice = f.cell;
        slice.add(on);
        ArrangementFace fp{f.sign, std::move(plus)};
        fp.sign.push_back(1);
        ArrangementFace f0{f.sign, std::move(slice)};
        f0.sign.push_back(0);
        ArrangementFace fm{f.sign, std::move(minus)};
        fm.sign.push_back(-1);
        next.push_back(std::move(fm));
        next.push_back(std::move(f0));
        next.push_back(std::move(fp));
      } else {
        // A relatively open convex set meeting the wall and one open side
        // would meet the other side too, so here the face lies entirely on
        // one side or inside the wall; its point set is unchanged.
        int s = has_plus ? 1 : (has_minus ? -1 : 0);
        ArrangementFace g{f.sign, std::move(f.cell)};
        g.sign.push_back(s);
        next.push_back(std::move(g));
      }
    }
    faces = std::move(next);
  }
  auto sign_less = [](const ArrangementFace& a, const ArrangementFace& b) {
    return a.sign < b.sign;
  };
  std::sort(faces.begin(), faces.end(), sign_less);
  return faces;
}

std::vector<QVector> arrangement_vertices(int dim,
                                          const std::vector<Wall>& walls,
                                          std::size_t budget) {
  int n = static_cast<int>(walls.size());
  if (n < dim) return {};
  std::size_t combos = 1;
  for (int i = 0; i < dim; ++i) {
    combos = combos * static_cast<std::size_t>(n - i) /
             static_cast<std::size_t>(i + 1);
    if (combos > budget) return {};
  }
  std::vector<QVector> out;
  std::vector<int> idx(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    QMatrix a(dim);
    QVector b(dim);
    for (int i = 0; i < dim; ++i) {
      a.append_row(walls[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].normal);
      b[i] = walls[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].offset;
    }
    if (rank(a) == dim) {
      auto x = solve(a, b);
      if (x) out.push_back(*x);
    }
    int k = dim - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - dim + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < dim; ++i) {
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace coneval
