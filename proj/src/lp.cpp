#include "coneval/lp.hpp"

#include <vector>

namespace coneval {

namespace {

using Row = std::vector<Rational>;

// Maximizes `cost` over the tableau rows a (m x (rhs+1) wide, last column the
// right-hand side) with the given basis; only columns below n_enter may enter
// the basis.  Bland's rule: first improving column enters; the minimum ratio
// row leaves, ties broken by smallest basic variable index.
LpStatus simplex_max(std::vector<Row>& a, std::vector<int>& basis,
                     const std::vector<Rational>& cost, int n_enter, int n) {
  int m = static_cast<int>(a.size());
  for (;;) {
    int enter = -1;
    for (int j = 0; j < n_enter && enter < 0; ++j) {
      Rational red = cost[static_cast<std::size_t>(j)];
      for (int i = 0; i < m; ++i) {
        const Rational& cb = cost[static_cast<std::size_t>(basis[i])];
        if (!cb.is_zero()) red -= cb * a[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)];
      }
      if (red.sign() > 0) enter = j;
    }
    if (enter < 0) return LpStatus::Optimal;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      const Rational& aij =
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (aij.sign() <= 0) continue;
      Rational ratio =
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] / aij;
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return LpStatus::Unbounded;
    Row& prow = a[static_cast<std::size_t>(leave)];
    Rational piv = prow[static_cast<std::size_t>(enter)];
    for (auto& x : prow) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      Row& r = a[static_cast<std::size_t>(i)];
      Rational f = r[static_cast<std::size_t>(enter)];
      if (f.is_zero()) continue;
      for (int j = 0; j <= n; ++j) {
        r[static_cast<std::size_t>(j)] -=
            f * prow[static_cast<std::size_t>(j)];
      }
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpResult solve_lp(int nvars, const std::vector<AffineCondition>& rows,
                  const QVector& objective) {
  if (objective.dim() != nvars) throw UsageError("objective dimension mismatch");
  int m = static_cast<int>(rows.size());
  int n_ge = 0;
  for (const auto& r : rows) {
    if (r.normal.dim() != nvars) throw UsageError("row dimension mismatch");
    if (r.rel != Rel::Eq) ++n_ge;
  }
  // Columns: split free variables, surplus for inequality rows, artificials.
  int n = 2 * nvars + n_ge + m;
  int art0 = 2 * nvars + n_ge;
  std::vector<Row> a(static_cast<std::size_t>(m),
                     Row(static_cast<std::size_t>(n + 1)));
  std::vector<int> basis(static_cast<std::size_t>(m));
  int ge_seen = 0;
  for (int i = 0; i < m; ++i) {
    Row& r = a[static_cast<std::size_t>(i)];
    for (int j = 0; j < nvars; ++j) {
      r[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)].normal[j];
      r[static_cast<std::size_t>(nvars + j)] = -r[static_cast<std::size_t>(j)];
    }
    if (rows[static_cast<std::size_t>(i)].rel != Rel::Eq) {
      r[static_cast<std::size_t>(2 * nvars + ge_seen)] = Rational(-1);
      ++ge_seen;
    }
    r[static_cast<std::size_t>(n)] = rows[static_cast<std::size_t>(i)].offset;
    if (r[static_cast<std::size_t>(n)].sign() < 0) {
      for (auto& x : r) x = -x;
    }
    r[static_cast<std::size_t>(art0 + i)] = Rational(1);
    basis[static_cast<std::size_t>(i)] = art0 + i;
  }

  std::vector<Rational> cost1(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    cost1[static_cast<std::size_t>(art0 + i)] = Rational(-1);
  }
  simplex_max(a, basis, cost1, n, n);
  Rational phase1;
  for (int i = 0; i < m; ++i) {
    phase1 += cost1[static_cast<std::size_t>(basis[i])] *
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  }
  if (phase1.sign() < 0) return {LpStatus::Infeasible, Rational(0), QVector()};

  // Remove artificials from the basis; rows that cannot pivot them out are
  // redundant and dropped.
  for (int i = m - 1; i >= 0; --i) {
    if (basis[static_cast<std::size_t>(i)] < art0) continue;
    int enter = -1;
    for (int j = 0; j < art0 && enter < 0; ++j) {
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               .is_zero()) {
        enter = j;
      }
    }
    if (enter < 0) {
      a.erase(a.begin() + i);
      basis.erase(basis.begin() + i);
      continue;
    }
    Row& prow = a[static_cast<std::size_t>(i)];
    Rational piv = prow[static_cast<std::size_t>(enter)];
    for (auto& x : prow) x /= piv;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (static_cast<int>(k) == i) continue;
      Rational f = a[k][static_cast<std::size_t>(enter)];
      if (f.is_zero()) continue;
      for (int j = 0; j <= n; ++j) {
        a[k][static_cast<std::size_t>(j)] -=
            f * prow[static_cast<std::size_t>(j)];
      }
    }
    basis[static_cast<std::size_t>(i)] = enter;
  }

  std::vector<Rational> cost2(static_cast<std::size_t>(n));
  for (int j = 0; j < nvars; ++j) {
    cost2[static_cast<std::size_t>(j)] = objective[j];
    cost2[static_cast<std::size_t>(nvars + j)] = -objective[j];
  }
  // Artificials are barred from re-entering via the column cap.
  LpStatus st = simplex_max(a, basis, cost2, art0, n);
  if (st == LpStatus::Unbounded) {
    return {LpStatus::Unbounded, Rational(0), QVector()};
  }
  Rational value;
  QVector x(nvars);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int b = basis[i];
    const Rational& rhs = a[i][static_cast<std::size_t>(n)];
    value += cost2[static_cast<std::size_t>(b)] * rhs;
    if (b < nvars) {
      x[b] += rhs;
    } else if (b < 2 * nvars) {
      x[b - nvars] -= rhs;
    }
  }
  return {LpStatus::Optimal, value, x};
}

namespace {

std::optional<QVector> witness_impl(const GeneralizedPolyhedron& p,
                                    bool slack_on_closed) {
  if (p.trivially_empty()) return std::nullopt;
  int d = p.dim();
  std::vector<AffineCondition> rows;
  bool any_strict = false;
  for (const auto& c : p.conditions()) {
    AffineCondition r;
    r.normal = QVector(d + 1);
    for (int i = 0; i < d; ++i) r.normal[i] = c.normal[i];
    r.offset = c.offset;
    if (c.rel == Rel::Eq) {
      r.rel = Rel::Eq;
    } else {
      r.rel = Rel::Ge;
      bool strict = c.rel == Rel::Gt;
      any_strict = any_strict || strict;
      if (strict || slack_on_closed) r.normal[d] = Rational(-1);
    }
    rows.push_back(std::move(r));
  }
  {
    AffineCondition cap;
    cap.normal = QVector(d + 1);
    cap.normal[d] = Rational(-1);
    cap.offset = Rational(-1);
    cap.rel = Rel::Ge;
    rows.push_back(std::move(cap));
  }
  QVector obj(d + 1);
  obj[d] = Rational(1);
  LpResult res = solve_lp(d + 1, rows, obj);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  // Negative best slack means some non-strict row is violated everywhere.
  if (res.value.sign() < 0) return std::nullopt;
  if (any_strict && res.value.sign() <= 0) return std::nullopt;
  QVector x(d);
  for (int i = 0; i < d; ++i) x[i] = res.point[i];
  return x;
}

}  // namespace

std::optional<QVector> relint_witness(const GeneralizedPolyhedron& p) {
  return witness_impl(p, false);
}

std::optional<QVector> interior_witness(const GeneralizedPolyhedron& p) {
  return witness_impl(p, true);
}

}  // namespace coneval
