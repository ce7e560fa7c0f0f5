#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "coneval/rational.hpp"

namespace coneval {

class QVector {
 public:
  QVector() = default;
  explicit QVector(int dim) : c_(static_cast<std::size_t>(dim)) {}
  QVector(std::initializer_list<Rational> xs) : c_(xs) {}
  explicit QVector(std::vector<Rational> xs) : c_(std::move(xs)) {}

  int dim() const { return static_cast<int>(c_.size()); }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const {
    return c_[static_cast<std::size_t>(i)];
  }
  bool is_zero() const;

  QVector operator-() const;
  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const Rational& s);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Rational& s, QVector v) { return v *= s; }

  friend bool operator==(const QVector& a, const QVector& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QVector& a, const QVector& b) {
    return !(a == b);
  }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

Rational dot(const QVector& a, const QVector& b);
// Lexicographic order on entries; total, used for canonical sorting.
int lex_compare(const QVector& a, const QVector& b);
bool lex_less(const QVector& a, const QVector& b);

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int cols) : cols_(cols) {}
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_rows(std::vector<QVector> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const QVector& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  QVector& row(int i) { return rows_[static_cast<std::size_t>(i)]; }
  void append_row(QVector r);
  const std::vector<QVector>& row_list() const { return rows_; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) {
    return !(a == b);
  }

 private:
  std::vector<QVector> rows_;
  int cols_ = 0;
};

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.  Pivot: first row with a nonzero entry
// in the current column.
int rank(const QMatrix& m);

// Reduced row echelon form with the same pivot rule.
QMatrix rref(const QMatrix& m);

// Canonical basis of the row space: nonzero rref rows scaled to primitive
// integer vectors.  Equal inputs with equal row spaces give equal outputs.
QMatrix row_space_basis(const QMatrix& m);

// Canonical basis (rows) of {x : m x = 0}.
QMatrix nullspace_basis(const QMatrix& m);

// Canonical basis of the orthogonal complement of the row space of `basis`.
QMatrix orthogonal_complement_basis(const QMatrix& basis);

// Orthogonal projection of x onto the row space of `basis`.
QVector project_onto_span(const QMatrix& basis, const QVector& x);

bool in_row_span(const QMatrix& basis, const QVector& x);

// One exact solution of a x = b (free variables set to 0), or nullopt if the
// system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Scales v by a positive rational so entries are coprime integers.  Preserves
// orientation; zero maps to zero.
QVector primitive_positive(const QVector& v);

// primitive_positive followed by a sign flip if the first nonzero entry is
// negative.  Canonical representative of the line through v.
QVector primitive_canonical(const QVector& v);

}  // namespace coneval
