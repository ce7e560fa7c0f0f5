#pragma once

#include <array>

#include "coneval/arrangement.hpp"
#include "coneval/indicator.hpp"
#include "coneval/lp.hpp"

namespace coneval {

namespace detail {
// Core sum over the face lattice.  flip_parity negates the per-face sign;
// used only by mutation-sensitivity tests.
Rational gamma_point_impl(const Cone& c, const QVector& x, const QVector& y,
                          bool flip_parity);
}  // namespace detail

// Sum over faces F of (-1)^{dim F} [cone of C at F](x) [dual of F](y).
Rational gamma_point(const Cone& c, const QVector& x, const QVector& y);

// One-parameter family: gamma_y_eval(C, y, x) = gamma_point(C, x, x - y).
Rational gamma_y_eval(const Cone& c, const QVector& y, const QVector& x);

struct ConeTerm {
  Rational coeff;
  Cone cone;
};
using ConeSum = std::vector<ConeTerm>;

// Termwise application of gamma_y_eval.
Rational gamma_y_on_sum(const ConeSum& s, const QVector& y, const QVector& x);

// gamma_y_eval(C, y, .) as an explicit formal sum of indicator cells, one
// term per face: the angle-cone conditions at F intersected with the dual
// cell of F translated by y.
FormalSum gamma_y_term_sum(const Cone& c, const QVector& y);

// Valuation induced on relatively open cones:
// (-1)^{dim C} * gamma_y applied to the interior expansion of [C].
Rational gamma_prime_y_eval(const Cone& c, const QVector& y, const QVector& x);

// gamma_prime_y applied to the expansion of [-relint C] into negated closed
// faces.
Rational reciprocity_lhs(const Cone& c, const QVector& y, const QVector& x);

// Sum over faces F of (-1)^{dim F - dim F_0} [relint of cone at F](x) *
// [relint of dual of F](x - y), F_0 the minimal face.
Rational reciprocity_rhs(const Cone& c, const QVector& y, const QVector& x);

struct RegionCell {
  GeneralizedPolyhedron cell;
  QVector witness;
  Rational value;
};

struct CellDecomposition {
  int dim = 0;
  std::vector<Wall> walls;
  std::vector<RegionCell> cells;  // cells with nonzero value only
};

// Support of x -> gamma_y_eval(C, y, x) as a cell decomposition: walls from
// every face's angle cone (through the origin) and dual cone (translated by
// y), cells of the induced arrangement carrying their constant values.
CellDecomposition gamma_region(const Cone& c, const QVector& y);

struct QuadrupleCheck {
  std::array<Rational, 4> lhs;
  std::array<Rational, 4> rhs;
  std::array<bool, 4> ok;
  bool all_ok() const { return ok[0] && ok[1] && ok[2] && ok[3]; }
};

// Four global identities mixing indicator sums of angle cones, duals, and
// projections of the argument.
QuadrupleCheck projection_identities_check(const Cone& c, const QVector& x);

// Four pointwise identities between face sums over [relint of angle cones]
// and reflected/dual indicators, anchored at the face with the given index.
QuadrupleCheck face_expansion_check(const Cone& c, int face_index, const QVector& x);

}  // namespace coneval
