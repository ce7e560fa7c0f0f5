#include "coneval/gamma.hpp"

#include <stdexcept>
#include <utility>

#include "coneval/errors.hpp"

namespace coneval {

namespace detail {

Rational gamma_point_impl(const Cone& c, const QVector& x, const QVector& y,
                          bool flip_parity) {
  if (x.dim() != c.ambient_dim() || y.dim() != c.ambient_dim()) {
    throw UsageError("point dimension mismatch");
  }
  const FaceLattice& lat = c.lattice();
  Rational sum;
  for (int i = 0; i < lat.size(); ++i) {
    if (!c.angle_contains(i, x)) continue;
    if (!c.face_dual_contains(i, y)) continue;
    int sign = lat.face(i).parity();
    if (flip_parity) sign = -sign;
    sum += Rational(sign);
  }
  return sum;
}

}  // namespace detail

Rational gamma_point(const Cone& c, const QVector& x, const QVector& y) {
  return detail::gamma_point_impl(c, x, y, false);
}

Rational gamma_y_eval(const Cone& c, const QVector& y, const QVector& x) {
  return gamma_point(c, x, x - y);
}

Rational gamma_y_on_sum(const ConeSum& s, const QVector& y, const QVector& x) {
  Rational sum;
  for (const auto& term : s) {
    if (term.coeff.is_zero()) continue;
    sum += term.coeff * gamma_y_eval(term.cone, y, x);
  }
  return sum;
}

FormalSum gamma_y_term_sum(const Cone& c, const QVector& y) {
  if (y.dim() != c.ambient_dim()) throw UsageError("point dimension mismatch");
  const FaceLattice& lat = c.lattice();
  FormalSum out(c.ambient_dim());
  for (int i = 0; i < lat.size(); ++i) {
    GeneralizedPolyhedron cell = closed_cell(c.angle_cone(i));
    cell = cell.intersect(closed_cell(c.face_dual_cone(i)).translated(y));
    out.append(Rational(lat.face(i).parity()), std::move(cell));
  }
  return out;
}

Rational gamma_prime_y_eval(const Cone& c, const QVector& y, const QVector& x) {
  const FaceLattice& lat = c.lattice();
  Rational sum;
  for (int i = 0; i < lat.size(); ++i) {
    int rel = c.dim() - lat.face(i).dim;
    Rational sign(rel % 2 == 0 ? 1 : -1);
    sum += sign * gamma_y_eval(c.face_cone(i), y, x);
  }
  return Rational(c.parity()) * sum;
}

Rational reciprocity_lhs(const Cone& c, const QVector& y, const QVector& x) {
  // [-relint C] expands into negated closed faces; pushing that expansion
  // through gamma_prime and regrouping by face gives one integer coefficient
  // per face, each multiplying gamma_y on the negated face.
  const FaceLattice& lat = c.lattice();
  const int n = lat.size();
  std::vector<long> coeff(static_cast<std::size_t>(n), 0);
  for (int f = 0; f < n; ++f) {
    int df = lat.face(f).dim;
    long outer = ((c.dim() - df) % 2 == 0 ? 1 : -1) * (df % 2 == 0 ? 1 : -1);
    for (int e = 0; e < n; ++e) {
      if (!lat.subset(e, f)) continue;
      long inner = (df - lat.face(e).dim) % 2 == 0 ? 1 : -1;
      coeff[static_cast<std::size_t>(e)] += outer * inner;
    }
  }
  Rational sum;
  for (int e = 0; e < n; ++e) {
    long k = coeff[static_cast<std::size_t>(e)];
    if (k == 0) continue;
    sum += Rational(k) * gamma_y_eval(c.neg_face_cone(e), y, x);
  }
  return sum;
}

Rational reciprocity_rhs(const Cone& c, const QVector& y, const QVector& x) {
  if (x.dim() != c.ambient_dim() || y.dim() != c.ambient_dim()) {
    throw UsageError("point dimension mismatch");
  }
  const FaceLattice& lat = c.lattice();
  const QVector z = x - y;
  const int d0 = lat.face(lat.minimal_index()).dim;
  Rational sum;
  for (int i = 0; i < lat.size(); ++i) {
    if (!c.angle_relint_contains(i, x)) continue;
    if (!c.face_dual_relint_contains(i, z)) continue;
    int rel = lat.face(i).dim - d0;
    sum += Rational(rel % 2 == 0 ? 1 : -1);
  }
  return sum;
}

CellDecomposition gamma_region(const Cone& c, const QVector& y) {
  if (y.dim() != c.ambient_dim()) throw UsageError("point dimension mismatch");
  if (c.ambient_dim() > 4) {
    throw UnsupportedInputError(
        "region decomposition is limited to ambient dimension 4");
  }
  // Every angle cone is cut out by facet normals and span cuts of the cone;
  // every face dual is cut out by rays and lineality rows.  The former give
  // walls through the origin, the latter walls shifted to pass through y.
  std::vector<Wall> walls;
  for (const auto& f : c.facet_normals()) walls.push_back(make_wall(f, Rational()));
  const QMatrix& aff = c.span_complement_basis();
  for (int i = 0; i < aff.rows(); ++i) {
    walls.push_back(make_wall(aff.row(i), Rational()));
  }
  for (const auto& r : c.rays()) walls.push_back(make_wall(r, dot(r, y)));
  const QMatrix& lin = c.lineality_basis();
  for (int i = 0; i < lin.rows(); ++i) {
    walls.push_back(make_wall(lin.row(i), dot(lin.row(i), y)));
  }
  walls = dedupe_walls(std::move(walls));

  CellDecomposition out;
  out.dim = c.ambient_dim();
  out.walls = walls;
  for (auto& face : enumerate_arrangement_faces(c.ambient_dim(), walls)) {
    std::optional<QVector> w = relint_witness(face.cell);
    if (!w) throw std::logic_error("nonempty arrangement face has no witness");
    Rational value = gamma_y_eval(c, y, *w);
    if (value.is_zero()) continue;
    out.cells.push_back(
        RegionCell{std::move(face.cell), std::move(*w), std::move(value)});
  }
  return out;
}

QuadrupleCheck projection_identities_check(const Cone& c, const QVector& x) {
  if (x.dim() != c.ambient_dim()) throw UsageError("point dimension mismatch");
  const FaceLattice& lat = c.lattice();
  QuadrupleCheck out;
  for (int i = 0; i < lat.size(); ++i) {
    int rel = c.dim() - lat.face(i).dim;
    Rational sign(rel % 2 == 0 ? 1 : -1);
    if (c.angle_contains(i, x) && c.face_dual_contains(i, x)) {
      out.lhs[0] += sign;
    }
    if (c.angle_relint_contains(i, x) && c.face_dual_relint_contains(i, x)) {
      out.lhs[1] += sign;
    }
    const QVector xf = project_onto_span(lat.face(i).span, x);
    const QVector xperp = x - xf;
    const Cone& angle = c.angle_cone(i);
    if (angle.dual_contains(xperp) && c.face_contains(i, xf)) {
      out.lhs[2] += sign;
    }
    if (angle.dual_relint_contains(xperp) && c.face_relint_contains(i, xf)) {
      out.lhs[3] += sign;
    }
  }
  Rational at_zero(c.is_subspace() && x.is_zero() ? 1 : 0);
  Rational subspace(c.is_subspace() ? 1 : 0);
  out.rhs = {at_zero, at_zero, subspace, subspace};
  for (int k = 0; k < 4; ++k) out.ok[static_cast<std::size_t>(k)] =
      out.lhs[static_cast<std::size_t>(k)] == out.rhs[static_cast<std::size_t>(k)];
  return out;
}

QuadrupleCheck face_expansion_check(const Cone& c, int face_index, const QVector& x) {
  if (x.dim() != c.ambient_dim()) throw UsageError("point dimension mismatch");
  const FaceLattice& lat = c.lattice();
  if (face_index < 0 || face_index >= lat.size()) {
    throw UsageError("face index out of range");
  }
  const QVector neg = -x;
  const int d0 = lat.face(lat.minimal_index()).dim;
  QuadrupleCheck out;
  for (int i = 0; i < lat.size(); ++i) {
    int di = lat.face(i).dim;
    Rational from_top((c.dim() - di) % 2 == 0 ? 1 : -1);
    Rational from_bottom((di - d0) % 2 == 0 ? 1 : -1);
    if (c.angle_contains(i, x)) out.lhs[0] += from_top;
    if (c.face_dual_contains(i, x)) out.lhs[1] += from_bottom;
    if (lat.subset(face_index, i) && c.angle_relint_contains(i, x)) {
      out.lhs[2] += from_top;
    }
    if (c.face_dual_relint_contains(i, x)) out.lhs[3] += from_bottom;
  }
  out.rhs[0] = Rational(c.relint_contains(neg) ? 1 : 0);
  out.rhs[1] = Rational(c.dual_relint_contains(neg) ? 1 : 0);
  out.rhs[2] = Rational(c.angle_contains(face_index, neg) ? 1 : 0);
  out.rhs[3] = Rational(c.dual_contains(neg) ? 1 : 0);
  for (int k = 0; k < 4; ++k) out.ok[static_cast<std::size_t>(k)] =
      out.lhs[static_cast<std::size_t>(k)] == out.rhs[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace coneval
