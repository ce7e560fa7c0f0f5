#include "coneval/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace coneval {

namespace {

void require_same_dim(const QVector& a, const QVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw UsageError(std::string("dimension mismatch in ") + op);
  }
}

}  // namespace

bool QVector::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

QVector QVector::operator-() const {
  QVector r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = -(*this)[i];
  return r;
}

QVector& QVector::operator+=(const QVector& o) {
  require_same_dim(*this, o, "vector addition");
  for (int i = 0; i < dim(); ++i) (*this)[i] += o[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_dim(*this, o, "vector subtraction");
  for (int i = 0; i < dim(); ++i) (*this)[i] -= o[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (int i = 0; i < dim(); ++i) (*this)[i] *= s;
  return *this;
}

std::string QVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << (*this)[i];
  }
  os << ")";
  return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
  require_same_dim(a, b, "dot product");
  Rational s;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

int lex_compare(const QVector& a, const QVector& b) {
  require_same_dim(a, b, "lexicographic comparison");
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

bool lex_less(const QVector& a, const QVector& b) {
  return lex_compare(a, b) < 0;
}

QMatrix::QMatrix(int rows, int cols) : cols_(cols) {
  rows_.assign(static_cast<std::size_t>(rows), QVector(cols));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row(i)[i] = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::vector<QVector> rows) {
  QMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows.front().dim();
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void QMatrix::append_row(QVector r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.dim();
  if (r.dim() != cols_) throw UsageError("row length mismatch");
  rows_.push_back(std::move(r));
}

int rank(const QMatrix& m) {
  // Clear denominators row by row, then run fraction-free elimination.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) {
      l = lcm(l, m.row(i)[j].den());
    }
    std::vector<mpz_class> r(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& x = m.row(i)[j];
      r[static_cast<std::size_t>(j)] = x.num() * (l / x.den());
    }
    a.push_back(std::move(r));
  }
  int nrows = m.rows();
  int ncols = m.cols();
  int rk = 0;
  mpz_class prev = 1;
  for (int col = 0; col < ncols && rk < nrows; ++col) {
    int pivot = -1;
    for (int i = rk; i < nrows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rk)],
              a[static_cast<std::size_t>(pivot)]);
    const auto& prow = a[static_cast<std::size_t>(rk)];
    for (int i = rk + 1; i < nrows; ++i) {
      auto& r = a[static_cast<std::size_t>(i)];
      for (int j = col + 1; j < ncols; ++j) {
        mpz_class v = prow[static_cast<std::size_t>(col)] *
                          r[static_cast<std::size_t>(j)] -
                      r[static_cast<std::size_t>(col)] *
                          prow[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        r[static_cast<std::size_t>(j)] = v;
      }
      r[static_cast<std::size_t>(col)] = 0;
    }
    prev = prow[static_cast<std::size_t>(col)];
    ++rk;
  }
  return rk;
}

QMatrix rref(const QMatrix& m) {
  QMatrix a = m;
  int nrows = a.rows();
  int ncols = a.cols();
  int r = 0;
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int pivot = -1;
    for (int i = r; i < nrows; ++i) {
      if (!a.row(i)[col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a.row(r), a.row(pivot));
    Rational inv = Rational(1) / a.row(r)[col];
    a.row(r) *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || a.row(i)[col].is_zero()) continue;
      Rational f = a.row(i)[col];
      a.row(i) -= f * a.row(r);
    }
    ++r;
  }
  return a;
}

QMatrix row_space_basis(const QMatrix& m) {
  QMatrix e = rref(m);
  QMatrix out(m.cols());
  for (int i = 0; i < e.rows(); ++i) {
    if (!e.row(i).is_zero()) out.append_row(primitive_positive(e.row(i)));
  }
  return out;
}

QMatrix nullspace_basis(const QMatrix& m) {
  QMatrix e = rref(m);
  int ncols = m.cols();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int i = 0; i < e.rows(); ++i) {
    for (int j = 0; j < ncols; ++j) {
      if (!e.row(i)[j].is_zero()) {
        pivot_col_of_row.push_back(j);
        is_pivot[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
  }
  QMatrix out(ncols);
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    QVector v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[pivot_col_of_row[r]] = -e.row(static_cast<int>(r))[free];
    }
    out.append_row(primitive_positive(v));
  }
  return out;
}

QMatrix orthogonal_complement_basis(const QMatrix& basis) {
  return nullspace_basis(basis);
}

QVector project_onto_span(const QMatrix& basis, const QVector& x) {
  QMatrix b = row_space_basis(basis);
  if (b.cols() == 0) {
    // Empty matrix carries no column count; treat as span {0} in x's space.
    return QVector(x.dim());
  }
  if (b.cols() != x.dim()) throw UsageError("projection dimension mismatch");
  int k = b.rows();
  if (k == 0) return QVector(x.dim());
  // Solve (B B^T) c = B x; the Gram matrix of an independent basis is
  // invertible, so the solution is unique.
  QMatrix gram(k, k);
  QVector rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram.row(i)[j] = dot(b.row(i), b.row(j));
    rhs[i] = dot(b.row(i), x);
  }
  auto c = solve(gram, rhs);
  if (!c) throw std::logic_error("singular Gram matrix");
  QVector p(x.dim());
  for (int i = 0; i < k; ++i) p += (*c)[i] * b.row(i);
  return p;
}

bool in_row_span(const QMatrix& basis, const QVector& x) {
  if (x.is_zero()) return true;
  QMatrix ext = basis;
  if (ext.cols() == 0 && ext.rows() == 0) ext = QMatrix(x.dim());
  ext.append_row(x);
  return rank(basis) == rank(ext);
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.dim()) throw UsageError("solve dimension mismatch");
  int ncols = a.cols();
  QMatrix aug(ncols + 1);
  for (int i = 0; i < a.rows(); ++i) {
    QVector r(ncols + 1);
    for (int j = 0; j < ncols; ++j) r[j] = a.row(i)[j];
    r[ncols] = b[i];
    aug.append_row(std::move(r));
  }
  QMatrix e = rref(aug);
  QVector x(ncols);
  for (int i = 0; i < e.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j <= ncols; ++j) {
      if (!e.row(i)[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    if (lead == ncols) return std::nullopt;
    x[lead] = e.row(i)[ncols];
  }
  return x;
}

QVector primitive_positive(const QVector& v) {
  if (v.is_zero()) return QVector(v.dim());
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    num_gcd = gcd(num_gcd, x.num());
    den_lcm = lcm(den_lcm, x.den());
  }
  Rational scale{mpq_class(den_lcm, num_gcd)};
  QVector out(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    Rational y = scale * v[i];
    out[i] = y;
  }
  return out;
}

QVector primitive_canonical(const QVector& v) {
  QVector p = primitive_positive(v);
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i].is_zero()) continue;
    if (p[i].sign() < 0) return -p;
    break;
  }
  return p;
}

}  // namespace coneval
