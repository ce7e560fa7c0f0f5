#pragma once

#include <optional>
#include <vector>

#include "coneval/cone.hpp"

namespace coneval {

enum class Rel { Ge, Gt, Eq };

// The condition <normal, v> - offset REL 0.
struct AffineCondition {
  QVector normal;
  Rational offset;
  Rel rel = Rel::Ge;

  bool holds_at(const QVector& v) const;
  AffineCondition negated_set() const;  // condition on -v
  AffineCondition translated(const QVector& t) const;
  // Scales by a positive rational so (normal | offset) is primitive integer.
  AffineCondition canonical() const;
  friend bool operator==(const AffineCondition& a, const AffineCondition& b) {
    return a.rel == b.rel && a.offset == b.offset && a.normal == b.normal;
  }
};

// Intersection of finitely many affine conditions; possibly neither open nor
// closed.
class GeneralizedPolyhedron {
 public:
  explicit GeneralizedPolyhedron(int dim) : dim_(dim) {}
  static GeneralizedPolyhedron whole_space(int dim) {
    return GeneralizedPolyhedron(dim);
  }

  int dim() const { return dim_; }
  const std::vector<AffineCondition>& conditions() const { return conds_; }
  // Adds a condition; constant conditions are folded away.
  void add(const AffineCondition& c);
  bool contains(const QVector& v) const;
  // True when a constant-false condition was added; the set is empty
  // syntactically, before any feasibility reasoning.
  bool trivially_empty() const { return trivially_empty_; }

  GeneralizedPolyhedron translated(const QVector& t) const;
  GeneralizedPolyhedron negated_set() const;  // {-v : v in P}
  GeneralizedPolyhedron intersect(const GeneralizedPolyhedron& o) const;

 private:
  int dim_;
  std::vector<AffineCondition> conds_;
  bool trivially_empty_ = false;
};

// Exact emptiness test by Fourier-Motzkin elimination with strict-inequality
// tracking.
bool is_feasible(const GeneralizedPolyhedron& p);

// Whether the set has recession cone {0}.  Empty sets count as bounded.
bool is_bounded(const GeneralizedPolyhedron& p);

GeneralizedPolyhedron closed_cell(const Cone& c);
GeneralizedPolyhedron relint_cell(const Cone& c);
// The cone described by the cell, when every condition is homogeneous and
// non-strict; UnsupportedInputError otherwise.
Cone cone_of_cell(const GeneralizedPolyhedron& p);

struct Term {
  Rational coeff;
  GeneralizedPolyhedron cell;
};

// Rational combination of indicator functions of generalized polyhedra.
class FormalSum {
 public:
  explicit FormalSum(int dim) : dim_(dim) {}
  static FormalSum zero(int dim) { return FormalSum(dim); }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  void append(Rational coeff, GeneralizedPolyhedron cell);

  Rational evaluate(const QVector& v) const;
  FormalSum& operator+=(const FormalSum& o);
  FormalSum scaled(const Rational& s) const;
  FormalSum translated(const QVector& t) const;
  FormalSum negated_set() const;
  // Pointwise product: pairwise intersections with multiplied coefficients.
  FormalSum product(const FormalSum& o) const;

 private:
  int dim_;
  std::vector<Term> terms_;
};

FormalSum indicator(const Cone& c);
FormalSum relint_indicator(const Cone& c);

// Sum of coefficients over nonempty cells.  Requires every condition closed;
// throws UnsupportedInputError on strict conditions.
Rational euler_char(const FormalSum& s);

// Term-by-term dual: each cell must describe a closed cone.
FormalSum dual_map(const FormalSum& s);

// [C] = sum over faces of [relint F].
FormalSum face_relint_partition(const Cone& c);
// [relint C] = sum over faces of (-1)^(dim C - dim F) [F].
FormalSum interior_expansion(const Cone& c);

}  // namespace coneval
