#include "coneval/cone.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

using namespace coneval;

namespace {

QVector qv(std::initializer_list<int> xs) {
  QVector v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = Rational(x);
  return v;
}

Cone quadrant() { return Cone::from_hrep(2, {qv({1, 0}), qv({0, 1})}); }

// All faces by brute force: every subset of facets, closed under the
// ray-incidence Galois map, deduplicated.
std::set<std::uint64_t> brute_force_active_sets(const Cone& c) {
  const auto& facets = c.facet_normals();
  const auto& rays = c.rays();
  int nf = static_cast<int>(facets.size());
  std::set<std::uint64_t> closed_sets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nf); ++s) {
    std::vector<int> common;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool on_all = true;
      for (int f = 0; f < nf; ++f) {
        if ((s >> f) & 1) {
          if (!dot(facets[static_cast<std::size_t>(f)], rays[r]).is_zero()) {
            on_all = false;
            break;
          }
        }
      }
      if (on_all) common.push_back(static_cast<int>(r));
    }
    std::uint64_t closed = 0;
    for (int f = 0; f < nf; ++f) {
      bool tight_on_common = true;
      for (int r : common) {
        if (!dot(facets[static_cast<std::size_t>(f)],
                 rays[static_cast<std::size_t>(r)])
                 .is_zero()) {
          tight_on_common = false;
          break;
        }
      }
      if (tight_on_common) closed |= (std::uint64_t{1} << f);
    }
    closed_sets.insert(closed);
  }
  return closed_sets;
}

}  // namespace

TEST_CASE("hrep to vrep") {
  Cone c = Cone::from_hrep(2, {qv({0, 1}), qv({1, -1})});
  REQUIRE(c.rays().size() == 2);
  CHECK(c.rays()[0] == qv({1, 0}));
  CHECK(c.rays()[1] == qv({1, 1}));
  CHECK(c.lineality_basis().rows() == 0);
  CHECK(c.dim() == 2);
}

TEST_CASE("vrep to hrep") {
  Cone c = Cone::from_vrep(2, {qv({1, 0}), qv({1, 1})}, {});
  REQUIRE(c.facet_normals().size() == 2);
  CHECK(c.facet_normals()[0] == qv({0, 1}));
  CHECK(c.facet_normals()[1] == qv({1, -1}));
  CHECK(c.span_complement_basis().rows() == 0);
}

TEST_CASE("single ray in the plane") {
  Cone c = Cone::from_vrep(2, {qv({1, 1})}, {});
  CHECK(c.dim() == 1);
  REQUIRE(c.facet_normals().size() == 1);
  CHECK(c.facet_normals()[0] == qv({1, 1}));
  REQUIRE(c.span_complement_basis().rows() == 1);
  CHECK(c.span_complement_basis().row(0) == qv({1, -1}));
  // Full constraint list: the span cut in both orientations plus the facet.
  REQUIRE(c.hrep().size() == 3);
  CHECK(c.hrep()[0].normal == qv({-1, 1}));
  CHECK_FALSE(c.hrep()[0].is_facet);
  CHECK(c.hrep()[1].normal == qv({1, -1}));
  CHECK(c.hrep()[2].normal == qv({1, 1}));
  CHECK(c.hrep()[2].is_facet);
}

TEST_CASE("extreme cases") {
  Cone v = Cone::whole_space(2);
  CHECK(v.rays().empty());
  CHECK(v.lineality_basis().rows() == 2);
  CHECK(v.facet_normals().empty());
  CHECK(v.is_subspace());
  CHECK(v.dim() == 2);

  Cone z = Cone::zero_cone(2);
  CHECK(z.rays().empty());
  CHECK(z.lineality_basis().rows() == 0);
  CHECK(z.dim() == 0);
  CHECK(z.span_complement_basis().rows() == 2);
  CHECK(z.contains(QVector(2)));
  CHECK_FALSE(z.contains(qv({1, 0})));
  CHECK(z.relint_contains(QVector(2)));
}

TEST_CASE("redundant generators and constraints are removed") {
  Cone a = Cone::from_vrep(2, {qv({1, 0}), qv({1, 1}), qv({2, 1}), qv({3, 3})},
                           {});
  Cone b = Cone::from_vrep(2, {qv({1, 1}), qv({1, 0})}, {});
  CHECK(a == b);
  Cone c = Cone::from_hrep(2, {qv({0, 1}), qv({1, -1}), qv({1, 0}), qv({2, -1})});
  CHECK(c == b);
}

TEST_CASE("canonical form is input-order independent") {
  Cone a = Cone::from_hrep(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  Cone b = Cone::from_hrep(3, {qv({0, 0, 2}), qv({1, 0, 0}), qv({0, 3, 0})});
  CHECK(a == b);
}

TEST_CASE("membership") {
  Cone c = quadrant();
  CHECK(c.contains(qv({2, 3})));
  CHECK(c.contains(qv({0, 0})));
  CHECK_FALSE(c.contains(qv({-1, 2})));
  CHECK(c.relint_contains(qv({1, 1})));
  CHECK_FALSE(c.relint_contains(qv({1, 0})));
  // Relative interior of a subspace is the subspace.
  Cone line = Cone::from_vrep(2, {}, {qv({1, 1})});
  CHECK(line.relint_contains(qv({-2, -2})));
  CHECK(line.relint_contains(QVector(2)));
  CHECK_FALSE(line.relint_contains(qv({1, 0})));
}

TEST_CASE("face lattice sizes") {
  CHECK(quadrant().face_count() == 4);
  Cone octant =
      Cone::from_hrep(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(octant.face_count() == 8);
  Cone square = Cone::from_vrep(
      3, {qv({1, 1, 1}), qv({-1, 1, 1}), qv({1, -1, 1}), qv({-1, -1, 1})}, {});
  CHECK(square.face_count() == 10);
  Cone half = Cone::from_hrep(2, {qv({1, 0})});
  CHECK(half.face_count() == 2);
  Cone line = Cone::from_vrep(2, {}, {qv({1, 0})});
  CHECK(line.face_count() == 1);
  CHECK(Cone::zero_cone(3).face_count() == 1);
}

TEST_CASE("face lattice matches brute force") {
  std::vector<Cone> cones = {
      quadrant(),
      Cone::from_hrep(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}),
      Cone::from_vrep(3, {qv({1, 1, 1}), qv({-1, 1, 1}), qv({1, -1, 1}),
                          qv({-1, -1, 1})},
                      {}),
      Cone::from_hrep(3, {qv({1, 0, 0}), qv({0, 1, 0})}),
      Cone::from_hrep(4, {qv({1, 0, 0, 0}), qv({0, 1, 0, 0}), qv({0, 0, 1, 1}),
                          qv({0, 0, 1, -1})}),
  };
  for (const auto& c : cones) {
    auto expected = brute_force_active_sets(c);
    const FaceLattice& lat = c.lattice();
    REQUIRE(lat.size() == static_cast<int>(expected.size()));
    for (int i = 0; i < lat.size(); ++i) {
      CHECK(expected.count(lat.face(i).active) == 1);
    }
  }
}

TEST_CASE("face order, minimal and top") {
  Cone c = quadrant();
  const FaceLattice& lat = c.lattice();
  CHECK(lat.face(lat.minimal_index()).dim == 0);
  CHECK(lat.face(lat.top_index()).dim == 2);
  CHECK(lat.minimal_index() == 0);
  CHECK(lat.top_index() == lat.size() - 1);
  // Containment is reverse inclusion of active sets.
  CHECK(lat.subset(lat.minimal_index(), lat.top_index()));
  CHECK_FALSE(lat.subset(lat.top_index(), lat.minimal_index()));
  for (int i = 0; i < lat.size(); ++i) {
    CHECK(lat.subset(lat.minimal_index(), i));
    CHECK(lat.subset(i, lat.top_index()));
  }
}

TEST_CASE("smallest face containing a point") {
  Cone c = quadrant();
  auto top = c.smallest_face_containing(qv({1, 1}));
  REQUIRE(top.has_value());
  CHECK(*top == c.top_face_index());
  auto edge = c.smallest_face_containing(qv({1, 0}));
  REQUIRE(edge.has_value());
  CHECK(c.lattice().face(*edge).dim == 1);
  CHECK(c.face_relint_contains(*edge, qv({1, 0})));
  auto origin = c.smallest_face_containing(QVector(2));
  REQUIRE(origin.has_value());
  CHECK(*origin == c.minimal_face_index());
  CHECK_FALSE(c.smallest_face_containing(qv({-1, 0})).has_value());
}

TEST_CASE("dual") {
  CHECK(quadrant().dual() == quadrant());
  Cone ray = Cone::from_vrep(2, {qv({1, 1})}, {});
  Cone d = ray.dual();
  CHECK(d.dim() == 2);
  CHECK(d.lineality_basis().rows() == 1);
  CHECK(d.lineality_basis().row(0) == qv({1, -1}));
  REQUIRE(d.rays().size() == 1);
  CHECK(d.rays()[0] == qv({1, 1}));
  // Duality is an involution.
  CHECK(ray.dual().dual() == ray);
  CHECK(Cone::whole_space(3).dual() == Cone::zero_cone(3));
  CHECK(Cone::zero_cone(3).dual() == Cone::whole_space(3));
}

TEST_CASE("angle cones at faces") {
  Cone c = quadrant();
  // At the apex the cone seen from the face is the cone itself.
  CHECK(c.angle_cone(c.minimal_face_index()) == c);
  // At the top face it is the whole span.
  CHECK(c.angle_cone(c.top_face_index()) == Cone::whole_space(2));
  auto edge = c.smallest_face_containing(qv({1, 0}));
  REQUIRE(edge.has_value());
  Cone expected = Cone::from_hrep(2, {qv({0, 1})});
  CHECK(c.angle_cone(*edge) == expected);
}

TEST_CASE("face dual cones") {
  Cone c = quadrant();
  CHECK(c.face_dual_cone(c.minimal_face_index()) == Cone::whole_space(2));
  CHECK(c.face_dual_cone(c.top_face_index()) == c.dual());
  auto edge = c.smallest_face_containing(qv({1, 0}));
  Cone expected = Cone::from_hrep(2, {qv({1, 0})});
  CHECK(c.face_dual_cone(*edge) == expected);
  // Lattice membership tests agree with the constructed cones.
  for (int i = 0; i < c.face_count(); ++i) {
    for (int x1 = -2; x1 <= 2; ++x1) {
      for (int x2 = -2; x2 <= 2; ++x2) {
        QVector p = qv({x1, x2});
        CHECK(c.face_dual_contains(i, p) == c.face_dual_cone(i).contains(p));
        CHECK(c.face_dual_relint_contains(i, p) ==
              c.face_dual_cone(i).relint_contains(p));
        CHECK(c.angle_contains(i, p) == c.angle_cone(i).contains(p));
        CHECK(c.angle_relint_contains(i, p) ==
              c.angle_cone(i).relint_contains(p));
        CHECK(c.face_contains(i, p) == c.face_cone(i).contains(p));
        CHECK(c.face_relint_contains(i, p) ==
              c.face_cone(i).relint_contains(p));
      }
    }
  }
}

TEST_CASE("angle cone hrep equals active constraints") {
  Cone c = Cone::from_vrep(
      3, {qv({1, 1, 1}), qv({-1, 1, 1}), qv({1, -1, 1}), qv({-1, -1, 1})}, {});
  for (int i = 0; i < c.face_count(); ++i) {
    const Face& f = c.lattice().face(i);
    std::vector<QVector> active;
    for (std::size_t fi = 0; fi < c.facet_normals().size(); ++fi) {
      if (f.active & (std::uint64_t{1} << fi)) {
        active.push_back(c.facet_normals()[fi]);
      }
    }
    for (int j = 0; j < c.span_complement_basis().rows(); ++j) {
      active.push_back(c.span_complement_basis().row(j));
      active.push_back(-c.span_complement_basis().row(j));
    }
    CHECK(c.angle_cone(i) == Cone::from_hrep(3, active));
  }
}

TEST_CASE("pointed part and lineality") {
  Cone half = Cone::from_hrep(2, {qv({1, 0})});
  CHECK_FALSE(half.is_pointed());
  CHECK(half.lineality_basis().rows() == 1);
  CHECK(half.lineality_basis().row(0) == qv({0, 1}));
  Cone pp = half.pointed_part();
  CHECK(pp == Cone::from_vrep(2, {qv({1, 0})}, {}));
  CHECK(quadrant().is_pointed());
  CHECK(quadrant().pointed_part() == quadrant());
}

TEST_CASE("negation") {
  Cone c = Cone::from_vrep(2, {qv({1, 0}), qv({1, 1})}, {});
  Cone n = c.negated();
  CHECK(n.contains(qv({-1, 0})));
  CHECK(n.contains(qv({-2, -1})));
  CHECK_FALSE(n.contains(qv({1, 0})));
  CHECK(n.negated() == c);
  Cone line = Cone::from_vrep(2, {}, {qv({1, 1})});
  CHECK(line.negated() == line);
}

TEST_CASE("minkowski sum") {
  Cone e1 = Cone::from_vrep(2, {qv({1, 0})}, {});
  Cone e2 = Cone::from_vrep(2, {qv({0, 1})}, {});
  CHECK(minkowski_sum(e1, e2) == quadrant());
  // Summing a cone with its negation gives the span.
  Cone c = Cone::from_vrep(2, {qv({1, 1})}, {});
  Cone s = minkowski_sum(c, c.negated());
  CHECK(s.is_subspace());
  CHECK(s.dim() == 1);
}

TEST_CASE("cut by a hyperplane") {
  auto res = cut(quadrant(), qv({1, -1}));
  CHECK(res.plus == Cone::from_vrep(2, {qv({1, 0}), qv({1, 1})}, {}));
  CHECK(res.minus == Cone::from_vrep(2, {qv({0, 1}), qv({1, 1})}, {}));
  CHECK(res.slice == Cone::from_vrep(2, {qv({1, 1})}, {}));
  CHECK_THROWS_AS(cut(quadrant(), QVector(2)), UsageError);
}

TEST_CASE("face parity sum detects subspaces") {
  CHECK(face_parity_sum(quadrant()) == Rational(0));
  CHECK(face_parity_sum(Cone::whole_space(3)) == Rational(1));
  CHECK(face_parity_sum(Cone::zero_cone(2)) == Rational(1));
  CHECK(face_parity_sum(Cone::from_vrep(3, {}, {qv({1, 0, 0}), qv({0, 1, 1})})) ==
        Rational(1));
  CHECK(face_parity_sum(Cone::from_vrep(2, {qv({1, 1})}, {})) == Rational(0));
  CHECK(face_parity_sum(Cone::from_hrep(2, {qv({1, 0})})) == Rational(0));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Cone::from_hrep(2, {QVector(2)}), UsageError);
  CHECK_THROWS_AS(Cone::from_hrep(2, {qv({1, 0, 0})}), UsageError);
  CHECK_THROWS_AS(Cone::from_vrep(2, {QVector(2)}, {}), UsageError);
  CHECK_THROWS_AS(Cone::from_hrep(0, {}), UsageError);
  CHECK_THROWS_AS(quadrant().contains(qv({1, 2, 3})), UsageError);
}

TEST_CASE("double description round trip") {
  std::vector<Cone> cones = {
      quadrant(),
      Cone::from_hrep(2, {qv({1, 0})}),
      Cone::from_vrep(3, {qv({1, 1, 1}), qv({-1, 1, 1}), qv({1, -1, 1}),
                          qv({-1, -1, 1})},
                      {}),
      Cone::from_vrep(3, {qv({1, 0, 0})}, {qv({0, 0, 1})}),
      Cone::whole_space(2),
      Cone::zero_cone(3),
  };
  for (const auto& c : cones) {
    std::vector<QVector> lin_rows;
    for (int i = 0; i < c.lineality_basis().rows(); ++i) {
      lin_rows.push_back(c.lineality_basis().row(i));
    }
    CHECK(Cone::from_vrep(c.ambient_dim(), c.rays(), lin_rows) == c);
    CHECK(Cone::from_hrep(c.ambient_dim(), c.hrep_normals()) == c);
    CHECK(c.dual().dual() == c);
  }
}
