#include "coneval/linalg.hpp"

#include "doctest.h"

using namespace coneval;

namespace {
QVector qv(std::initializer_list<int> xs) {
  QVector v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = Rational(x);
  return v;
}
}  // namespace

TEST_CASE("dot product") {
  QVector a{Rational(1), Rational(1, 2)};
  QVector b{Rational(-1), Rational(-1, 2)};
  CHECK(dot(a, b) == Rational(-5, 4));
  CHECK(dot(qv({1, 2, 3}), qv({3, 2, 1})) == Rational(10));
  CHECK(dot(QVector(3), qv({5, 6, 7})) == Rational(0));
  CHECK_THROWS_AS(dot(qv({1}), qv({1, 2})), UsageError);
}

TEST_CASE("rank") {
  CHECK(rank(QMatrix::from_rows({qv({1, 0}), qv({0, 1})})) == 2);
  CHECK(rank(QMatrix::from_rows({qv({1, 1}), qv({2, 2})})) == 1);
  CHECK(rank(QMatrix(2)) == 0);
  CHECK(rank(QMatrix::from_rows({qv({1, 2, 3}), qv({4, 5, 6}),
                                 qv({7, 8, 9})})) == 2);
  // Rational entries.
  QMatrix m = QMatrix::from_rows(
      {QVector{Rational(1, 2), Rational(1, 3)},
       QVector{Rational(3, 2), Rational(1)}, QVector{Rational(2), Rational(4, 3)}});
  CHECK(rank(m) == 1);
}

TEST_CASE("rref pivots agree with rank") {
  QMatrix m = QMatrix::from_rows(
      {qv({0, 2, 4}), qv({1, 1, 1}), qv({1, 3, 5}), qv({2, 4, 6})});
  QMatrix e = rref(m);
  int nonzero = 0;
  for (int i = 0; i < e.rows(); ++i) {
    if (!e.row(i).is_zero()) ++nonzero;
  }
  CHECK(nonzero == rank(m));
  CHECK(rank(m) == 2);
}

TEST_CASE("projection onto row span") {
  QMatrix basis = QMatrix::from_rows({qv({1, 1})});
  CHECK(project_onto_span(basis, qv({2, 0})) == qv({1, 1}));
  // Projection is idempotent and the residual is orthogonal to the span.
  QVector x{Rational(3), Rational(-7, 2)};
  QVector p = project_onto_span(basis, x);
  CHECK(project_onto_span(basis, p) == p);
  CHECK(dot(x - p, basis.row(0)) == Rational(0));
  // Dependent spanning rows are tolerated.
  QMatrix dep = QMatrix::from_rows({qv({1, 1}), qv({2, 2})});
  CHECK(project_onto_span(dep, qv({2, 0})) == qv({1, 1}));
  // Projection onto the zero span is zero.
  CHECK(project_onto_span(QMatrix(2), qv({5, 6})) == QVector(2));
}

TEST_CASE("orthogonal complement") {
  QMatrix basis = QMatrix::from_rows({qv({1, 0, 0})});
  QMatrix comp = orthogonal_complement_basis(basis);
  CHECK(comp.rows() == 2);
  for (int i = 0; i < comp.rows(); ++i) {
    CHECK(dot(comp.row(i), basis.row(0)) == Rational(0));
  }
  CHECK(rank(comp) == 2);
  // rank + corank = dim
  QMatrix b2 = QMatrix::from_rows({qv({1, 2, 3, 4}), qv({0, 1, 0, 1})});
  CHECK(rank(b2) + orthogonal_complement_basis(b2).rows() == 4);
  // Complement of the full space is empty.
  CHECK(orthogonal_complement_basis(QMatrix::identity(3)).rows() == 0);
}

TEST_CASE("nullspace") {
  QMatrix m = QMatrix::from_rows({qv({1, 1, 0}), qv({0, 0, 1})});
  QMatrix ns = nullspace_basis(m);
  REQUIRE(ns.rows() == 1);
  CHECK(dot(ns.row(0), m.row(0)) == Rational(0));
  CHECK(dot(ns.row(0), m.row(1)) == Rational(0));
}

TEST_CASE("solve") {
  QMatrix a = QMatrix::from_rows({qv({2, 1}), qv({1, -1})});
  auto x = solve(a, qv({3, 0}));
  REQUIRE(x.has_value());
  CHECK(*x == qv({1, 1}));
  // Inconsistent system.
  QMatrix b = QMatrix::from_rows({qv({1, 1}), qv({1, 1})});
  CHECK_FALSE(solve(b, qv({1, 2})).has_value());
  // Underdetermined: returns one exact solution.
  QMatrix c = QMatrix::from_rows({qv({1, 1})});
  auto y = solve(c, QVector{Rational(5)});
  REQUIRE(y.has_value());
  CHECK(dot(c.row(0), *y) == Rational(5));
}

TEST_CASE("primitive scaling") {
  QVector v{Rational(1, 2), Rational(-3, 4)};
  CHECK(primitive_positive(v) == qv({2, -3}));
  CHECK(primitive_canonical(v) == qv({2, -3}));
  QVector w{Rational(-2), Rational(4)};
  CHECK(primitive_positive(w) == qv({-1, 2}));
  CHECK(primitive_canonical(w) == qv({1, -2}));
  CHECK(primitive_positive(QVector(3)) == QVector(3));
  CHECK(primitive_positive(qv({0, 0, 6})) == qv({0, 0, 1}));
}

TEST_CASE("row space basis is canonical per subspace") {
  QMatrix a = QMatrix::from_rows({qv({1, 1, 0}), qv({0, 1, 1})});
  QMatrix b = QMatrix::from_rows({qv({1, 2, 1}), qv({2, 3, 1}), qv({1, 0, -1})});
  CHECK(row_space_basis(a) == row_space_basis(b));
}

TEST_CASE("in_row_span") {
  QMatrix b = QMatrix::from_rows({qv({1, 1, 0})});
  CHECK(in_row_span(b, qv({2, 2, 0})));
  CHECK_FALSE(in_row_span(b, qv({1, 0, 0})));
  CHECK(in_row_span(QMatrix(3), QVector(3)));
}
