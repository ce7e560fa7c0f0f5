#include <vector>

#include "coneval/lp.hpp"
#include "doctest.h"

using namespace coneval;

namespace {

QVector qv(std::vector<Rational> v) {
  QVector out(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<int>(i)] = v[i];
  return out;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

AffineCondition cond(std::vector<Rational> n, Rational off, Rel rel) {
  return {qv(std::move(n)), off, rel};
}

bool satisfies(const std::vector<AffineCondition>& rows, const QVector& x) {
  for (const auto& r : rows) {
    Rational s = dot(r.normal, x) - r.offset;
    if (r.rel == Rel::Eq ? !s.is_zero() : s.sign() < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("bounded maximum on a box") {
  std::vector<AffineCondition> rows = {
      cond({q(1), q(0)}, q(0), Rel::Ge),
      cond({q(-1), q(0)}, q(-1), Rel::Ge),
      cond({q(0), q(1)}, q(0), Rel::Ge),
      cond({q(0), q(-1)}, q(-2), Rel::Ge),
  };
  LpResult r = solve_lp(2, rows, qv({q(1), q(1)}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == q(3));
  CHECK(r.point == qv({q(1), q(2)}));
}

TEST_CASE("unbounded and infeasible programs") {
  std::vector<AffineCondition> open_ray = {cond({q(1)}, q(0), Rel::Ge)};
  CHECK(solve_lp(1, open_ray, qv({q(1)})).status == LpStatus::Unbounded);
  CHECK(solve_lp(1, open_ray, qv({q(-1)})).status == LpStatus::Optimal);

  std::vector<AffineCondition> clash = {
      cond({q(1)}, q(1), Rel::Ge),
      cond({q(-1)}, q(0), Rel::Ge),
  };
  CHECK(solve_lp(1, clash, qv({q(1)})).status == LpStatus::Infeasible);

  CHECK(solve_lp(2, {}, qv({q(0), q(0)})).status == LpStatus::Optimal);
  CHECK(solve_lp(2, {}, qv({q(1), q(0)})).status == LpStatus::Unbounded);
}

TEST_CASE("equalities and free variables") {
  std::vector<AffineCondition> rows = {
      cond({q(1), q(1)}, q(2), Rel::Eq),
      cond({q(0), q(1)}, q(1), Rel::Ge),
  };
  LpResult r = solve_lp(2, rows, qv({q(1), q(0)}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == q(1));
  CHECK(r.point == qv({q(1), q(1)}));

  // Optimum at negative coordinates exercises the variable split.
  std::vector<AffineCondition> low = {cond({q(1)}, q(-5), Rel::Ge)};
  LpResult neg = solve_lp(1, low, qv({q(-1)}));
  REQUIRE(neg.status == LpStatus::Optimal);
  CHECK(neg.value == q(5));
  CHECK(neg.point == qv({q(-5)}));

  // Fractional data stays exact.
  std::vector<AffineCondition> frac = {
      cond({q(2), q(3)}, q(1), Rel::Eq),
      cond({q(1), q(0)}, q(0), Rel::Ge),
      cond({q(0), q(1)}, q(0), Rel::Ge),
  };
  LpResult f = solve_lp(2, frac, qv({q(1), q(1)}));
  REQUIRE(f.status == LpStatus::Optimal);
  CHECK(f.value == q(1, 2));  // at (1/2, 0)
}

TEST_CASE("redundant rows are harmless") {
  std::vector<AffineCondition> rows = {
      cond({q(1), q(1)}, q(2), Rel::Eq),
      cond({q(2), q(2)}, q(4), Rel::Eq),
      cond({q(1), q(-1)}, q(0), Rel::Ge),
      cond({q(1), q(-1)}, q(0), Rel::Ge),
  };
  LpResult r = solve_lp(2, rows, qv({q(0), q(1)}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == q(1));
  CHECK(satisfies(rows, r.point));
}

TEST_CASE("witness of a relatively open cell") {
  GeneralizedPolyhedron quad(2);
  quad.add({qv({q(1), q(0)}), q(0), Rel::Gt});
  quad.add({qv({q(0), q(1)}), q(0), Rel::Gt});
  auto w = relint_witness(quad);
  REQUIRE(w.has_value());
  CHECK(quad.contains(*w));

  GeneralizedPolyhedron pt(2);
  pt.add({qv({q(1), q(0)}), q(2), Rel::Eq});
  pt.add({qv({q(0), q(1)}), q(-3), Rel::Eq});
  auto wp = relint_witness(pt);
  REQUIRE(wp.has_value());
  CHECK(*wp == qv({q(2), q(-3)}));

  // Pinched strict cell: x > 0 and x < 0.
  GeneralizedPolyhedron pinched(1);
  pinched.add({qv({q(1)}), q(0), Rel::Gt});
  pinched.add({qv({q(-1)}), q(0), Rel::Gt});
  CHECK(!relint_witness(pinched).has_value());

  // Degenerate strict cell: x >= 1, x <= 1, x > 1.
  GeneralizedPolyhedron edge(1);
  edge.add({qv({q(1)}), q(1), Rel::Ge});
  edge.add({qv({q(-1)}), q(-1), Rel::Ge});
  edge.add({qv({q(1)}), q(1), Rel::Gt});
  CHECK(!relint_witness(edge).has_value());

  // Thin strict slab: witness strictly inside.
  GeneralizedPolyhedron slab(1);
  slab.add({qv({q(1)}), q(0), Rel::Gt});
  slab.add({qv({q(-1)}), q(-1, 8), Rel::Gt});
  auto ws = relint_witness(slab);
  REQUIRE(ws.has_value());
  CHECK(slab.contains(*ws));

  CHECK(relint_witness(GeneralizedPolyhedron::whole_space(2)).has_value());
}

TEST_CASE("witness deep inside a closed cell") {
  GeneralizedPolyhedron quad(2);
  quad.add({qv({q(1), q(0)}), q(0), Rel::Ge});
  quad.add({qv({q(0), q(1)}), q(0), Rel::Ge});
  auto w = interior_witness(quad);
  REQUIRE(w.has_value());
  CHECK((*w)[0].sign() > 0);
  CHECK((*w)[1].sign() > 0);

  // A ray has no interior, but the witness still exists on the ray.
  GeneralizedPolyhedron ray(2);
  ray.add({qv({q(1), q(0)}), q(0), Rel::Ge});
  ray.add({qv({q(-1), q(0)}), q(0), Rel::Ge});
  ray.add({qv({q(0), q(1)}), q(0), Rel::Ge});
  auto wr = interior_witness(ray);
  REQUIRE(wr.has_value());
  CHECK(ray.contains(*wr));

  GeneralizedPolyhedron empty(1);
  empty.add({qv({q(1)}), q(1), Rel::Ge});
  empty.add({qv({q(-1)}), q(0), Rel::Ge});
  CHECK(!interior_witness(empty).has_value());
}
