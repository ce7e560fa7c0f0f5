#include "coneval/harness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "coneval/errors.hpp"
#include "coneval/json_io.hpp"

namespace coneval {

using nlohmann::json;

// --------------------------------------------------------------------------
// Deterministic randomness
// --------------------------------------------------------------------------

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t v) {
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

std::uint64_t Rng::next() {
  state_ += kGolden;
  return mix64(state_);
}

long Rng::range(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

std::size_t Rng::index(std::size_t size) { return next() % size; }

bool Rng::chance(long num, long den) {
  return static_cast<long>(next() % static_cast<std::uint64_t>(den)) < num;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGolden);
}

// --------------------------------------------------------------------------
// Generator modes
// --------------------------------------------------------------------------

std::string gen_mode_to_string(GenMode m) {
  switch (m) {
    case GenMode::RandomRays: return "random-rays";
    case GenMode::RandomHalfspaces: return "random-halfspaces";
    case GenMode::Subspace: return "subspace";
    case GenMode::PointedFull: return "pointed-full";
    case GenMode::WithLineality: return "with-lineality";
    case GenMode::ZeroCone: return "zero-cone";
    case GenMode::FullSpace: return "full-space";
    case GenMode::Mixed: return "mixed";
  }
  throw std::logic_error("unhandled generator mode");
}

GenMode gen_mode_from_string(const std::string& s) {
  for (GenMode m : {GenMode::RandomRays, GenMode::RandomHalfspaces,
                    GenMode::Subspace, GenMode::PointedFull,
                    GenMode::WithLineality, GenMode::ZeroCone,
                    GenMode::FullSpace, GenMode::Mixed}) {
    if (gen_mode_to_string(m) == s) return m;
  }
  throw UsageError("unknown generator mode: " + s);
}

// --------------------------------------------------------------------------
// Random vectors and cones
// --------------------------------------------------------------------------

namespace {

QVector random_integer_vector(Rng& rng, int dim, long bound) {
  QVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Rational(rng.range(-bound, bound));
  return v;
}

QVector random_nonzero_integer_vector(Rng& rng, int dim, long bound) {
  for (int tries = 0; tries < 64; ++tries) {
    QVector v = random_integer_vector(rng, dim, bound);
    if (!v.is_zero()) return v;
  }
  QVector v(dim);
  v[0] = Rational(1);
  return v;
}

GenMode pick_concrete_mode(Rng& rng) {
  // Weighted toward the structured families; the two trivial cones are
  // already in every degenerate catalog.
  static const GenMode table[] = {
      GenMode::RandomRays,       GenMode::RandomRays,
      GenMode::RandomRays,       GenMode::RandomHalfspaces,
      GenMode::RandomHalfspaces, GenMode::RandomHalfspaces,
      GenMode::PointedFull,      GenMode::PointedFull,
      GenMode::PointedFull,      GenMode::WithLineality,
      GenMode::WithLineality,    GenMode::Subspace,
      GenMode::Subspace,         GenMode::ZeroCone,
      GenMode::FullSpace,
  };
  return table[rng.index(std::size(table))];
}

std::vector<QVector> lineality_rows(const Cone& c) {
  std::vector<QVector> rows;
  for (int i = 0; i < c.lineality_basis().rows(); ++i) {
    rows.push_back(c.lineality_basis().row(i));
  }
  return rows;
}

}  // namespace

QVector random_point(int dim, long bound, Rng& rng) {
  if (dim < 1) throw UsageError("point dimension must be positive");
  if (bound < 1) throw UsageError("coordinate bound must be positive");
  QVector v(dim);
  for (int i = 0; i < dim; ++i) {
    long num = rng.range(-bound, bound);
    long den = rng.range(1, bound);
    v[i] = Rational(num, den);
  }
  return v;
}

QVector random_point(int dim, long bound, std::uint64_t seed) {
  Rng rng(seed);
  return random_point(dim, bound, rng);
}

Cone random_cone(int dim, GenMode mode, int generator_bound, long coord_bound,
                 Rng& rng) {
  if (dim < 1 || dim > 5) throw UsageError("generator dimension must be 1..5");
  if (generator_bound < 1) throw UsageError("generator bound must be positive");
  if (coord_bound < 1 || coord_bound > 8) {
    throw UsageError("coordinate bound must be 1..8");
  }
  if (mode == GenMode::Mixed) mode = pick_concrete_mode(rng);
  switch (mode) {
    case GenMode::ZeroCone:
      return Cone::zero_cone(dim);
    case GenMode::FullSpace:
      return Cone::whole_space(dim);
    case GenMode::Subspace: {
      long k = rng.range(0, dim);
      std::vector<QVector> rows;
      for (long i = 0; i < k; ++i) {
        rows.push_back(random_integer_vector(rng, dim, coord_bound));
      }
      return Cone::from_vrep(dim, {}, rows);
    }
    case GenMode::RandomRays: {
      long n = rng.range(1, generator_bound);
      std::vector<QVector> rays;
      for (long i = 0; i < n; ++i) {
        rays.push_back(random_nonzero_integer_vector(rng, dim, coord_bound));
      }
      return Cone::from_vrep(dim, rays, {});
    }
    case GenMode::RandomHalfspaces: {
      long n = rng.range(1, generator_bound);
      std::vector<QVector> normals;
      for (long i = 0; i < n; ++i) {
        normals.push_back(random_nonzero_integer_vector(rng, dim, coord_bound));
      }
      return Cone::from_hrep(dim, normals);
    }
    case GenMode::WithLineality: {
      long n = rng.range(0, generator_bound);
      std::vector<QVector> rays;
      for (long i = 0; i < n; ++i) {
        rays.push_back(random_nonzero_integer_vector(rng, dim, coord_bound));
      }
      long k = rng.range(1, std::max<long>(1, dim - 1));
      std::vector<QVector> rows;
      for (long i = 0; i < k; ++i) {
        rows.push_back(random_integer_vector(rng, dim, coord_bound));
      }
      return Cone::from_vrep(dim, rays, rows);
    }
    case GenMode::PointedFull: {
      for (int attempt = 0; attempt < 40; ++attempt) {
        long n = rng.range(dim, dim + generator_bound);
        std::vector<QVector> rays;
        for (long i = 0; i < n; ++i) {
          QVector r = random_integer_vector(rng, dim, coord_bound);
          // All rays in an open halfspace: the cone stays pointed.
          r[0] = Rational(rng.range(1, coord_bound));
          rays.push_back(r);
        }
        Cone c = Cone::from_vrep(dim, rays, {});
        if (c.is_pointed() && c.is_full_dim()) return c;
      }
      // Deterministic fallback: the nonnegative orthant.
      std::vector<QVector> rays;
      for (int i = 0; i < dim; ++i) {
        QVector e(dim);
        e[i] = Rational(1);
        rays.push_back(e);
      }
      return Cone::from_vrep(dim, rays, {});
    }
    case GenMode::Mixed:
      break;
  }
  throw std::logic_error("unhandled generator mode");
}

Cone random_cone(const GeneratorProfile& profile) {
  Rng rng(profile.seed);
  return random_cone(profile.dim, profile.mode, profile.generator_bound,
                     profile.coord_bound, rng);
}

std::vector<Cone> degenerate_catalog(int dim) {
  if (dim < 1) throw UsageError("catalog dimension must be positive");
  std::vector<Cone> out;
  auto push = [&out](const Cone& c) {
    for (const auto& seen : out) {
      if (seen == c) return;
    }
    out.push_back(c);
  };
  auto unit = [dim](int i) {
    QVector e(dim);
    e[i] = Rational(1);
    return e;
  };
  push(Cone::zero_cone(dim));
  push(Cone::whole_space(dim));
  for (int k = 1; k < dim; ++k) {
    std::vector<QVector> rows;
    for (int i = 0; i < k; ++i) rows.push_back(unit(i));
    push(Cone::from_vrep(dim, {}, rows));
  }
  push(Cone::from_vrep(dim, {unit(0)}, {}));
  QVector ones(dim);
  for (int i = 0; i < dim; ++i) ones[i] = Rational(1);
  push(Cone::from_vrep(dim, {ones}, {}));
  if (dim >= 2) push(Cone::from_vrep(dim, {-unit(1)}, {}));
  push(Cone::from_hrep(dim, {unit(0)}));
  {
    std::vector<QVector> rays;
    for (int i = 0; i < dim; ++i) rays.push_back(unit(i));
    push(Cone::from_vrep(dim, rays, {}));
  }
  if (dim >= 2) {
    QVector diag(dim);
    diag[0] = Rational(1);
    diag[1] = Rational(1);
    push(Cone::from_vrep(dim, {unit(0), diag}, {}));
    push(Cone::from_vrep(dim, {unit(0)}, {unit(1)}));
  }
  if (dim >= 3) {
    QVector diag(dim);
    diag[0] = Rational(1);
    diag[1] = Rational(1);
    push(Cone::from_vrep(dim, {unit(0), diag}, {unit(dim - 1)}));
    std::vector<QVector> square;
    for (int s2 : {-1, 1}) {
      for (int s3 : {-1, 1}) {
        QVector r(dim);
        r[0] = Rational(1);
        r[1] = Rational(s2);
        r[2] = Rational(s3);
        square.push_back(r);
      }
    }
    push(Cone::from_vrep(dim, square, {}));
  }
  return out;
}

// --------------------------------------------------------------------------
// Counterexample shrinking
// --------------------------------------------------------------------------

namespace {

Rational shrink_toward_zero(const Rational& q) {
  if (q.is_zero()) return q;
  mpz_class half = q.num() / 2;  // truncates toward zero
  return Rational(half) / Rational(q.den());
}

}  // namespace

Cone shrink_cone(const Cone& start,
                 const std::function<bool(const Cone&)>& still_fails) {
  Cone current = start;
  int dim = start.ambient_dim();
  int budget = 200;

  auto try_candidate = [&](const std::vector<QVector>& rays,
                           const std::vector<QVector>& lins) -> bool {
    if (budget <= 0) return false;
    --budget;
    try {
      std::vector<QVector> clean;
      for (const auto& r : rays) {
        if (!r.is_zero()) clean.push_back(r);
      }
      Cone cand = Cone::from_vrep(dim, clean, lins);
      if (cand == current) return false;
      if (!still_fails(cand)) return false;
      current = cand;
      return true;
    } catch (...) {
      return false;
    }
  };

  bool progress = true;
  while (progress && budget > 0) {
    progress = false;
    std::vector<QVector> rays = current.rays();
    std::vector<QVector> lins = lineality_rows(current);

    for (std::size_t i = 0; i < rays.size() && !progress; ++i) {
      auto rs = rays;
      rs.erase(rs.begin() + static_cast<long>(i));
      progress = try_candidate(rs, lins);
    }
    for (std::size_t i = 0; i < lins.size() && !progress; ++i) {
      auto ls = lins;
      ls.erase(ls.begin() + static_cast<long>(i));
      progress = try_candidate(rays, ls);
    }
    for (std::size_t i = 0; i < rays.size() && !progress; ++i) {
      for (int j = 0; j < dim && !progress; ++j) {
        if (rays[i][j].is_zero()) continue;
        auto rs = rays;
        rs[i][j] = Rational(0);
        progress = try_candidate(rs, lins);
        if (!progress) {
          rs = rays;
          rs[i][j] = shrink_toward_zero(rays[i][j]);
          if (rs[i][j] != rays[i][j]) progress = try_candidate(rs, lins);
        }
      }
    }
    for (std::size_t i = 0; i < lins.size() && !progress; ++i) {
      for (int j = 0; j < dim && !progress; ++j) {
        if (lins[i][j].is_zero()) continue;
        auto ls = lins;
        ls[i][j] = Rational(0);
        progress = try_candidate(rays, ls);
        if (!progress) {
          ls = lins;
          ls[i][j] = shrink_toward_zero(lins[i][j]);
          if (ls[i][j] != lins[i][j]) progress = try_candidate(rays, ls);
        }
      }
    }
  }
  return current;
}

// --------------------------------------------------------------------------
// Reports
// --------------------------------------------------------------------------

namespace {

json profile_to_json(const GeneratorProfile& p) {
  json out;
  out["dim"] = p.dim;
  out["mode"] = gen_mode_to_string(p.mode);
  out["generator_bound"] = p.generator_bound;
  out["coord_bound"] = p.coord_bound;
  out["seed"] = p.seed;
  return out;
}

}  // namespace

json report_to_json(const CheckReport& r) {
  json out;
  out["suite"] = r.suite;
  out["profile"] = profile_to_json(r.profile);
  out["trials"] = r.trials;
  out["passed"] = r.passed();
  json cov = json::object();
  for (const auto& [key, count] : r.coverage) cov[key] = count;
  out["coverage"] = cov;
  json fails = json::array();
  for (const auto& f : r.failures) {
    json jf = f.details;
    jf["check"] = f.check;
    fails.push_back(jf);
  }
  out["failures"] = fails;
  return out;
}

// --------------------------------------------------------------------------
// Suite machinery
// --------------------------------------------------------------------------

namespace {

constexpr int kMaxFailuresPerSuite = 5;

struct SuiteState {
  CheckReport report;
  FaultInjection faults;
  std::uint64_t master = 0;
  bool aborted = false;

  void bump(const std::string& key, long n = 1) { report.coverage[key] += n; }

  void fail(const std::string& check, json details) {
    report.failures.push_back({check, std::move(details)});
    if (static_cast<int>(report.failures.size()) >= kMaxFailuresPerSuite) {
      aborted = true;
    }
  }

  // Evaluation paths honoring the injected faults (used by the two suites
  // that the mutation check must be able to break).
  Rational gamma_pt(const Cone& c, const QVector& x, const QVector& y) const {
    return detail::gamma_point_impl(c, x, y, faults.flip_face_sign);
  }
  Rational gamma_y(const Cone& c, const QVector& y, const QVector& x) const {
    return gamma_pt(c, x, x - y);
  }
};

json fail_details(const std::string& label, const Cone& cone, json inputs,
                  json expected, json actual) {
  json out;
  out["trial"] = label;
  out["cone"] = cone_to_json(cone);
  out["inputs"] = std::move(inputs);
  out["expected"] = std::move(expected);
  out["actual"] = std::move(actual);
  return out;
}

void report_cone_failure(SuiteState& st, const std::string& check,
                         const std::string& label, const Cone& cone,
                         json inputs, json expected, json actual,
                         const std::function<bool(const Cone&)>& still_fails) {
  json details = fail_details(label, cone, std::move(inputs),
                              std::move(expected), std::move(actual));
  if (still_fails) {
    Cone small = shrink_cone(cone, still_fails);
    if (!(small == cone)) details["shrunk_cone"] = cone_to_json(small);
  }
  st.fail(check, std::move(details));
}

// Visits the degenerate catalog for every dimension up to the profile cap,
// then `trials` random cones with dimensions cycling 1..profile.dim.
template <typename Visit>
void for_each_cone(SuiteState& st, int trials, Visit&& visit) {
  const GeneratorProfile& pr = st.report.profile;
  int k = 0;
  for (int d = 1; d <= pr.dim && !st.aborted; ++d) {
    for (const Cone& c : degenerate_catalog(d)) {
      if (st.aborted) return;
      Rng rng(derive_seed(st.master, 0x10000u + static_cast<std::uint64_t>(k)));
      st.bump("catalog-cones");
      visit(c, rng, "catalog/d" + std::to_string(d) + "/" + std::to_string(k));
      ++k;
    }
  }
  for (int t = 0; t < trials && !st.aborted; ++t) {
    Rng rng(derive_seed(st.master, static_cast<std::uint64_t>(t)));
    int d = 1 + t % pr.dim;
    GenMode mode =
        pr.mode == GenMode::Mixed ? pick_concrete_mode(rng) : pr.mode;
    Cone c = random_cone(d, mode, pr.generator_bound, pr.coord_bound, rng);
    st.bump("random-cones");
    st.bump("dim-" + std::to_string(d));
    st.bump("mode-" + gen_mode_to_string(mode));
    visit(c, rng, "trial/" + std::to_string(t));
  }
}

// Mix of geometry-aware points: the origin, interior points of the cone and
// its dual (and their negatives), face interior points, conic combinations,
// and random rationals.
std::vector<QVector> structured_points(const Cone& c, Rng& rng, int count,
                                       long bound) {
  int dim = c.ambient_dim();
  std::vector<QVector> pts;
  pts.push_back(QVector(dim));
  QVector rp = relint_point(c);
  QVector dp = dual_relint_point(c);
  pts.push_back(rp);
  pts.push_back(-rp);
  pts.push_back(dp);
  pts.push_back(-dp);
  for (int i = 0; i < c.face_count() && i < 6; ++i) {
    pts.push_back(relint_point(c.face_cone(i)));
  }
  auto conic_point = [&]() {
    QVector v(dim);
    for (const auto& r : c.rays()) v += Rational(rng.range(0, 2)) * r;
    const QMatrix& lb = c.lineality_basis();
    for (int i = 0; i < lb.rows(); ++i) {
      v += Rational(rng.range(-2, 2)) * lb.row(i);
    }
    return v;
  };
  while (static_cast<int>(pts.size()) < count) {
    if (rng.chance(1, 2)) {
      pts.push_back(random_point(dim, bound, rng));
    } else {
      QVector v = conic_point();
      if (rng.chance(1, 2)) v = -v;
      pts.push_back(v);
    }
  }
  return pts;
}

// Nonnegative combination of the rays plus lineality jitter: a point of C.
QVector cone_point(const Cone& c, Rng& rng) {
  QVector v(c.ambient_dim());
  for (const auto& r : c.rays()) v += Rational(rng.range(0, 3)) * r;
  const QMatrix& lb = c.lineality_basis();
  for (int i = 0; i < lb.rows(); ++i) {
    v += Rational(rng.range(-2, 2)) * lb.row(i);
  }
  return v;
}

// Rejection sampling away from every face span and its orthogonal
// complement, mirroring a general-position assumption.
QVector general_position_point(const Cone& c, Rng& rng, long bound) {
  const FaceLattice& lat = c.lattice();
  int dim = c.ambient_dim();
  for (int tries = 0; tries < 64; ++tries) {
    QVector p = random_point(dim, bound, rng);
    if (p.is_zero()) continue;
    bool ok = true;
    for (int i = 0; i < lat.size() && ok; ++i) {
      const QMatrix& span = lat.face(i).span;
      if (span.rows() > 0 && span.rows() < dim && in_row_span(span, p)) {
        ok = false;
      }
      if (ok && span.rows() > 0 && project_onto_span(span, p).is_zero()) {
        ok = false;
      }
    }
    if (ok) return p;
  }
  return random_point(dim, bound, rng);
}

bool cone_subset(const Cone& a, const Cone& b) {
  for (const auto& r : a.rays()) {
    if (!b.contains(r)) return false;
  }
  for (int i = 0; i < a.lineality_basis().rows(); ++i) {
    QVector l = a.lineality_basis().row(i);
    if (!b.contains(l) || !b.contains(-l)) return false;
  }
  return true;
}

int find_face_with_cone(const Cone& host, const Cone& target) {
  for (int i = 0; i < host.face_count(); ++i) {
    if (host.face_cone(i) == target) return i;
  }
  return -1;
}

// Brute-force angle cone: active facet normals plus both span cuts.
Cone brute_force_angle(const Cone& c, int face_index) {
  std::vector<QVector> normals;
  const Face& f = c.lattice().face(face_index);
  for (std::size_t k = 0; k < c.facet_normals().size(); ++k) {
    if (f.active & (std::uint64_t{1} << k)) {
      normals.push_back(c.facet_normals()[k]);
    }
  }
  for (int j = 0; j < c.span_complement_basis().rows(); ++j) {
    normals.push_back(c.span_complement_basis().row(j));
    normals.push_back(-c.span_complement_basis().row(j));
  }
  return Cone::from_hrep(c.ambient_dim(), normals);
}

// A second point of a relatively open cell, obtained by moving from the
// witness along a random direction projected into the cell's equality
// subspace and scaled to stay strictly inside.
QVector interior_point_of_cell(const GeneralizedPolyhedron& cell,
                               const QVector& witness, Rng& rng) {
  int dim = witness.dim();
  std::vector<QVector> eq_normals;
  for (const auto& cond : cell.conditions()) {
    if (cond.rel == Rel::Eq) eq_normals.push_back(cond.normal);
  }
  QMatrix eq = QMatrix::from_rows(eq_normals);
  for (int tries = 0; tries < 8; ++tries) {
    QVector d = random_integer_vector(rng, dim, 3);
    if (eq.rows() > 0) d -= project_onto_span(eq, d);
    if (d.is_zero()) continue;
    // Largest step keeping every inequality satisfied, then halved.
    Rational cap;
    bool capped = false;
    bool stuck = false;
    for (const auto& cond : cell.conditions()) {
      if (cond.rel == Rel::Eq) continue;
      Rational v = dot(cond.normal, d);
      if (v.sign() >= 0) continue;
      Rational slack = dot(cond.normal, witness) - cond.offset;
      if (slack.sign() == 0) {
        stuck = true;  // sitting on a closed boundary facing the move
        break;
      }
      Rational limit = slack / -v;
      if (!capped || limit < cap) {
        cap = limit;
        capped = true;
      }
    }
    if (stuck) continue;
    Rational t = capped ? cap / Rational(2) : Rational(1);
    if (t.sign() <= 0) continue;
    return witness + t * d;
  }
  return witness;
}

// --------------------------------------------------------------------------
// Suites
// --------------------------------------------------------------------------

void suite_dd_roundtrip(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    auto expect_cone = [&](const char* check, const Cone& got,
                           const Cone& want) {
      if (got == want) return;
      report_cone_failure(st, check, label, c, json::object(),
                          cone_to_json(want), cone_to_json(got), nullptr);
    };
    expect_cone("vrep-round-trip", Cone::from_vrep(dim, c.rays(), lineality_rows(c)), c);
    expect_cone("hrep-round-trip", Cone::from_hrep(dim, c.hrep_normals()), c);
    expect_cone("double-dual", c.dual().dual(), c);
    expect_cone("double-negation", c.negated().negated(), c);

    Cone d = c.dual();
    int want_dim = dim - c.lineality_basis().rows();
    int want_lin = dim - c.dim();
    if (d.dim() != want_dim || d.lineality_basis().rows() != want_lin) {
      st.fail("dual-dimensions",
              fail_details(label, c, json::object(),
                           json{{"dual_dim", want_dim}, {"dual_lineality", want_lin}},
                           json{{"dual_dim", d.dim()},
                                {"dual_lineality", d.lineality_basis().rows()}}));
      return;
    }
    if (!c.pointed_part().is_pointed()) {
      st.fail("pointed-part", fail_details(label, c, json::object(),
                                           "pointed", "has lineality"));
      return;
    }

    QVector rp = relint_point(c);
    QVector dp = dual_relint_point(c);
    if (!c.relint_contains(rp) || !d.relint_contains(dp) ||
        !c.dual_relint_contains(dp) || !d.dual_relint_contains(rp)) {
      st.fail("interior-points",
              fail_details(label, c,
                           json{{"relint_point", vector_to_json(rp)},
                                {"dual_relint_point", vector_to_json(dp)}},
                           true, false));
      return;
    }

    // Membership agrees with face search: the smallest face containing a
    // point exists exactly for members and holds the point in its relative
    // interior.
    for (int k = 0; k < 8; ++k) {
      QVector p = k % 2 == 0 ? random_point(dim, 4, rng) : cone_point(c, rng);
      auto sf = c.smallest_face_containing(p);
      bool inside = c.contains(p);
      bool ok = inside == sf.has_value();
      if (ok && sf.has_value()) {
        ok = c.face_relint_contains(*sf, p);
      }
      if (!ok) {
        report_cone_failure(
            st, "smallest-face", label, c, json{{"x", vector_to_json(p)}},
            true, false, [p](const Cone& s) {
              auto f = s.smallest_face_containing(p);
              if (s.contains(p) != f.has_value()) return true;
              return f.has_value() && !s.face_relint_contains(*f, p);
            });
        return;
      }
      st.bump(inside ? "member-points" : "outside-points");
    }
  });
}

void suite_face_oracle(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng&, const std::string& label) {
    int nf = static_cast<int>(c.facet_normals().size());
    if (nf > 8) {
      st.bump("skipped-many-facets");
      return;
    }
    st.bump("brute-forced");
    int dim = c.ambient_dim();
    std::set<std::uint64_t> masks;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << nf); ++s) {
      std::vector<QVector> normals = c.hrep_normals();
      for (int i = 0; i < nf; ++i) {
        if (s & (std::uint64_t{1} << i)) normals.push_back(-c.facet_normals()[i]);
      }
      Cone f = Cone::from_hrep(dim, normals);
      std::uint64_t active = 0;
      for (int i = 0; i < nf; ++i) {
        const QVector& n = c.facet_normals()[i];
        bool on = true;
        for (const auto& r : f.rays()) {
          if (!dot(n, r).is_zero()) {
            on = false;
            break;
          }
        }
        for (int j = 0; j < f.lineality_basis().rows() && on; ++j) {
          if (!dot(n, f.lineality_basis().row(j)).is_zero()) on = false;
        }
        if (on) active |= std::uint64_t{1} << i;
      }
      masks.insert(active);
      int idx = c.lattice().index_of_active(active);
      if (idx < 0) {
        st.fail("face-missing-from-lattice",
                fail_details(label, c, json{{"active_facets", active}},
                             "present", "absent"));
        return;
      }
      if (!(c.face_cone(idx) == f)) {
        st.fail("face-cone-mismatch",
                fail_details(label, c, json{{"active_facets", active}},
                             cone_to_json(f), cone_to_json(c.face_cone(idx))));
        return;
      }
    }
    if (masks.size() != static_cast<std::size_t>(c.face_count())) {
      st.fail("face-count-mismatch",
              fail_details(label, c, json::object(),
                           masks.size(), c.face_count()));
      return;
    }
    for (int i = 0; i < c.face_count(); ++i) {
      Cone brute = brute_force_angle(c, i);
      if (!(c.angle_cone(i) == brute)) {
        st.fail("angle-cone-mismatch",
                fail_details(label, c, json{{"face", i}}, cone_to_json(brute),
                             cone_to_json(c.angle_cone(i))));
        return;
      }
    }
    st.bump("faces-cross-checked", c.face_count());
  });
}

void suite_euler(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    Rational expect = c.is_subspace() ? Rational(1) : Rational(0);
    Rational got = face_parity_sum(c);
    st.bump(c.is_subspace() ? "subspace-cones" : "general-cones");
    if (got != expect) {
      report_cone_failure(
          st, "alternating-face-sum", label, c, json::object(),
          rational_to_json(expect), rational_to_json(got), [](const Cone& s) {
            Rational e = s.is_subspace() ? Rational(1) : Rational(0);
            return face_parity_sum(s) != e;
          });
      return;
    }
    Rational chi = euler_char(indicator(c));
    if (chi != Rational(1)) {
      report_cone_failure(st, "euler-characteristic", label, c, json::object(),
                          "1", rational_to_json(chi), [](const Cone& s) {
                            return euler_char(indicator(s)) != Rational(1);
                          });
      return;
    }
    FormalSum expansion = interior_expansion(c);
    long bound = st.report.profile.coord_bound;
    for (const QVector& p : structured_points(c, rng, 10, bound)) {
      Rational want = c.relint_contains(p) ? Rational(1) : Rational(0);
      Rational val = expansion.evaluate(p);
      if (val != want) {
        report_cone_failure(
            st, "interior-expansion", label, c, json{{"x", vector_to_json(p)}},
            rational_to_json(want), rational_to_json(val), [p](const Cone& s) {
              Rational w = s.relint_contains(p) ? Rational(1) : Rational(0);
              return interior_expansion(s).evaluate(p) != w;
            });
        return;
      }
    }
  });
}

void suite_indicator_cut(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    QVector h = random_nonzero_integer_vector(rng, dim, bound);
    CutResult parts = cut(c, h);
    st.bump("cuts");

    std::vector<QVector> pts = structured_points(c, rng, 50, bound);
    Rational hh = dot(h, h);
    std::size_t base = pts.size();
    for (std::size_t i = 0; i < base && i < 8; ++i) {
      // Projections onto the cutting hyperplane exercise the slice term.
      pts.push_back(pts[i] - (dot(h, pts[i]) / hh) * h);
    }

    FormalSum lhs = indicator(c);
    FormalSum rhs = indicator(parts.plus);
    rhs += indicator(parts.minus);
    rhs += indicator(parts.slice).scaled(Rational(-1));

    FormalSum dual_lhs = dual_map(lhs);
    FormalSum dual_rhs = dual_map(rhs);

    for (const QVector& p : pts) {
      int want = c.contains(p) ? 1 : 0;
      int got = (parts.plus.contains(p) ? 1 : 0) +
                (parts.minus.contains(p) ? 1 : 0) -
                (parts.slice.contains(p) ? 1 : 0);
      if (want != got) {
        report_cone_failure(
            st, "cut-membership", label, c,
            json{{"hyperplane", vector_to_json(h)}, {"x", vector_to_json(p)}},
            want, got, [h, p](const Cone& s) {
              CutResult cs = cut(s, h);
              int w = s.contains(p) ? 1 : 0;
              int g = (cs.plus.contains(p) ? 1 : 0) +
                      (cs.minus.contains(p) ? 1 : 0) -
                      (cs.slice.contains(p) ? 1 : 0);
              return w != g;
            });
        return;
      }
      if (lhs.evaluate(p) != rhs.evaluate(p)) {
        st.fail("cut-formal-sum",
                fail_details(label, c,
                             json{{"hyperplane", vector_to_json(h)},
                                  {"x", vector_to_json(p)}},
                             rational_to_json(lhs.evaluate(p)),
                             rational_to_json(rhs.evaluate(p))));
        return;
      }
      if (dual_lhs.evaluate(p) != dual_rhs.evaluate(p)) {
        st.fail("cut-dual-map",
                fail_details(label, c,
                             json{{"hyperplane", vector_to_json(h)},
                                  {"x", vector_to_json(p)}},
                             rational_to_json(dual_lhs.evaluate(p)),
                             rational_to_json(dual_rhs.evaluate(p))));
        return;
      }
      st.bump(dot(h, p).is_zero() ? "points-on-hyperplane"
                                  : "points-off-hyperplane");
    }
    if (euler_char(lhs) != euler_char(rhs)) {
      st.fail("cut-euler-characteristic",
              fail_details(label, c, json{{"hyperplane", vector_to_json(h)}},
                           rational_to_json(euler_char(lhs)),
                           rational_to_json(euler_char(rhs))));
    }
  });
}

void suite_angle_correspondence(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng&, const std::string& label) {
    int dim = c.ambient_dim();
    const FaceLattice& lat = c.lattice();
    int nf = lat.size();
    auto expect_cone = [&](const char* check, const Cone& got,
                           const Cone& want, json inputs) {
      if (got == want) return false;
      st.fail(check, fail_details(label, c, std::move(inputs),
                                  cone_to_json(want), cone_to_json(got)));
      return true;
    };

    int f0 = c.minimal_face_index();
    int top = c.top_face_index();
    std::vector<QVector> span_rows;
    for (int i = 0; i < lat.face(top).span.rows(); ++i) {
      span_rows.push_back(lat.face(top).span.row(i));
    }
    Cone span_cone = Cone::from_vrep(dim, {}, span_rows);
    Cone lineality_cone = Cone::from_vrep(dim, {}, lineality_rows(c));
    if (expect_cone("angle-at-minimal-face", c.angle_cone(f0), c, {})) return;
    if (expect_cone("angle-at-top-face", c.angle_cone(top), span_cone, {}))
      return;
    if (expect_cone("minimal-face-is-lineality", c.face_cone(f0),
                    lineality_cone, {}))
      return;
    if (expect_cone("pointed-decomposition",
                    minkowski_sum(c.face_cone(f0), c.pointed_part()), c, {}))
      return;
    for (int i = 0; i < nf; ++i) {
      if (expect_cone("face-dual-cone", c.face_dual_cone(i),
                      c.face_cone(i).dual(), json{{"face", i}}))
        return;
      if (expect_cone("negated-face-cone", c.neg_face_cone(i),
                      c.face_cone(i).negated(), json{{"face", i}}))
        return;
    }

    if (c.facet_normals().size() > 8) {
      st.bump("skipped-pairwise");
      return;
    }
    st.bump("pairwise-checked");

    for (int fi = 0; fi < nf && !st.aborted; ++fi) {
      const Cone& afc = c.angle_cone(fi);
      Cone afc_dual = afc.dual();
      int above = 0;
      for (int gi = 0; gi < nf; ++gi) {
        if (lat.subset(fi, gi)) ++above;
      }
      if (afc.face_count() != above) {
        st.fail("angle-face-count",
                fail_details(label, c, json{{"face", fi}}, above,
                             afc.face_count()));
        return;
      }
      std::vector<int> supers;
      std::vector<Cone> angles_in_super;  // A(F,G) for each G above F
      for (int gi = 0; gi < nf; ++gi) {
        if (!lat.subset(fi, gi)) continue;
        const Cone& g = c.face_cone(gi);
        int fj = find_face_with_cone(g, c.face_cone(fi));
        if (fj < 0) {
          st.fail("face-of-face-missing",
                  fail_details(label, c, json{{"face", fi}, {"super", gi}},
                               "present", "absent"));
          return;
        }
        Cone afg = g.angle_cone(fj);
        int k = find_face_with_cone(afc, afg);
        if (k < 0) {
          st.fail("angle-not-a-face",
                  fail_details(label, c, json{{"face", fi}, {"super", gi}},
                               "face of the angle cone", cone_to_json(afg)));
          return;
        }
        // Cone of A(F,C) at its face A(F,G) is A(G,C).
        if (!(afc.angle_cone(k) == c.angle_cone(gi))) {
          st.fail("angle-composition",
                  fail_details(label, c, json{{"face", fi}, {"super", gi}},
                               cone_to_json(c.angle_cone(gi)),
                               cone_to_json(afc.angle_cone(k))));
          return;
        }
        // Cone of A(F,C)* at its face A(G,C)* is A(F,G)*.
        Cone agc_dual = c.angle_cone(gi).dual();
        int kd = find_face_with_cone(afc_dual, agc_dual);
        if (kd < 0) {
          st.fail("dual-angle-not-a-face",
                  fail_details(label, c, json{{"face", fi}, {"super", gi}},
                               "face of the dual angle cone",
                               cone_to_json(agc_dual)));
          return;
        }
        if (!(afc_dual.angle_cone(kd) == afg.dual())) {
          st.fail("dual-angle-composition",
                  fail_details(label, c, json{{"face", fi}, {"super", gi}},
                               cone_to_json(afg.dual()),
                               cone_to_json(afc_dual.angle_cone(kd))));
          return;
        }
        supers.push_back(gi);
        angles_in_super.push_back(std::move(afg));
        st.bump("face-pairs");
      }
      // The correspondence preserves and reflects inclusion.
      for (std::size_t a = 0; a < supers.size(); ++a) {
        for (std::size_t b = 0; b < supers.size(); ++b) {
          bool faces_inc = lat.subset(supers[a], supers[b]);
          bool angles_inc = cone_subset(angles_in_super[a], angles_in_super[b]);
          if (faces_inc != angles_inc) {
            st.fail("angle-monotonicity",
                    fail_details(label, c,
                                 json{{"face", fi},
                                      {"super_a", supers[a]},
                                      {"super_b", supers[b]}},
                                 faces_inc, angles_inc));
            return;
          }
        }
      }
    }
  });
}

void suite_face_expansion(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    if (c.face_count() > 24) {
      st.bump("skipped-many-faces");
      return;
    }
    long bound = st.report.profile.coord_bound;
    std::vector<QVector> pts = structured_points(c, rng, 50, bound);
    st.bump("points", static_cast<long>(pts.size()));
    st.bump("face-anchors", c.face_count());
    for (const QVector& x : pts) {
      for (int f = 0; f < c.face_count(); ++f) {
        QuadrupleCheck r = face_expansion_check(c, f, x);
        if (r.all_ok()) continue;
        int bad = 0;
        while (r.ok[bad]) ++bad;
        report_cone_failure(
            st, "face-expansion-identity-" + std::to_string(bad + 1), label, c,
            json{{"face", f}, {"x", vector_to_json(x)}},
            rational_to_json(r.rhs[bad]), rational_to_json(r.lhs[bad]),
            [x](const Cone& s) {
              for (int g = 0; g < s.face_count(); ++g) {
                if (!face_expansion_check(s, g, x).all_ok()) return true;
              }
              return false;
            });
        return;
      }
    }
  });
}

void suite_special_values(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    int pc = c.parity();
    int p0 = c.lattice().face(c.minimal_face_index()).parity();

    QVector rp = relint_point(c);
    QVector dp = dual_relint_point(c);
    if (!c.relint_contains(rp) || !c.dual_relint_contains(dp)) {
      st.fail("interior-point-construction",
              fail_details(label, c,
                           json{{"relint_point", vector_to_json(rp)},
                                {"dual_relint_point", vector_to_json(dp)}},
                           true, false));
      return;
    }

    // Nonnegative combinations of facet normals (plus arbitrary multiples
    // of the span cuts) lie in the dual cone; weights >= 1 on every facet
    // land in its relative interior.
    auto dual_point = [&](bool strict) {
      QVector v(dim);
      for (const auto& n : c.facet_normals()) {
        v += Rational(strict ? rng.range(1, 3) : rng.range(0, 2)) * n;
      }
      for (int j = 0; j < c.span_complement_basis().rows(); ++j) {
        v += Rational(rng.range(-2, 2)) * c.span_complement_basis().row(j);
      }
      return v;
    };

    // Parameter in the dual cone: the value is the cone parity on the
    // negated relative interior and zero elsewhere.
    for (int k = 0; k < 8; ++k) {
      QVector y = dual_point(false);
      QVector x = k % 2 == 0 ? random_point(dim, bound, rng)
                             : -(Rational(rng.range(1, 3)) * rp);
      Rational want =
          Rational(pc) * (c.relint_contains(-x) ? Rational(1) : Rational(0));
      Rational got = gamma_point(c, x, y);
      if (got != want) {
        report_cone_failure(
            st, "dual-parameter-formula", label, c,
            json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}},
            rational_to_json(want), rational_to_json(got),
            [x, y](const Cone& s) {
              if (!s.dual_contains(y)) return false;
              Rational w = Rational(s.parity()) *
                           (s.relint_contains(-x) ? Rational(1) : Rational(0));
              return gamma_point(s, x, y) != w;
            });
        return;
      }
      st.bump(want.is_zero() ? "dual-parameter-zero" : "dual-parameter-hits");
    }

    // Parameter in the negated dual interior: the value is the minimal-face
    // parity on the cone itself.
    for (int k = 0; k < 8; ++k) {
      QVector y = -dual_point(true);
      QVector x = k % 2 == 0 ? random_point(dim, bound, rng)
                             : cone_point(c, rng);
      Rational want =
          Rational(p0) * (c.contains(x) ? Rational(1) : Rational(0));
      Rational got = gamma_point(c, x, y);
      if (got != want) {
        report_cone_failure(
            st, "negated-dual-interior-formula", label, c,
            json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}},
            rational_to_json(want), rational_to_json(got),
            [x, y](const Cone& s) {
              if (!s.dual_relint_contains(-y)) return false;
              int q0 = s.lattice().face(s.minimal_face_index()).parity();
              Rational w = Rational(q0) *
                           (s.contains(x) ? Rational(1) : Rational(0));
              return gamma_point(s, x, y) != w;
            });
        return;
      }
      st.bump(want.is_zero() ? "negated-dual-zero" : "negated-dual-hits");
    }

    // Subspaces: a clean product formula against the orthogonal complement.
    if (c.is_subspace()) {
      for (int k = 0; k < 8; ++k) {
        QVector x = k % 2 == 0 ? random_point(dim, bound, rng)
                               : cone_point(c, rng);
        QVector y = k % 3 == 0 ? dual_point(false)
                               : random_point(dim, bound, rng);
        Rational want = Rational(pc) *
                        (c.contains(x) ? Rational(1) : Rational(0)) *
                        (c.dual_contains(y) ? Rational(1) : Rational(0));
        Rational got = gamma_point(c, x, y);
        if (got != want) {
          st.fail("subspace-product-formula",
                  fail_details(label, c,
                               json{{"x", vector_to_json(x)},
                                    {"y", vector_to_json(y)}},
                               rational_to_json(want), rational_to_json(got)));
          return;
        }
        st.bump("subspace-pairs");
      }
    }

    // Support constraints: zero whenever the point leaves the span of the
    // cone or the parameter pairs nontrivially with the lineality space.
    const QMatrix& span = c.lattice().face(c.top_face_index()).span;
    for (int k = 0; k < 10; ++k) {
      QVector x = random_point(dim, bound, rng);
      QVector y = random_point(dim, bound, rng);
      if (k % 3 == 1 && c.span_complement_basis().rows() > 0) {
        x += c.span_complement_basis().row(0);  // force x off the span
      }
      if (k % 3 == 2 && c.lineality_basis().rows() > 0) {
        y += c.lineality_basis().row(0);  // force a lineality pairing
      }
      bool x_in_span = c.is_full_dim() || in_row_span(span, x);
      bool y_perp_lineality = true;
      for (int j = 0; j < c.lineality_basis().rows(); ++j) {
        if (!dot(c.lineality_basis().row(j), y).is_zero()) {
          y_perp_lineality = false;
          break;
        }
      }
      if (x_in_span && y_perp_lineality) {
        st.bump("inside-support-pairs");
        continue;
      }
      st.bump("outside-support-pairs");
      Rational got = gamma_point(c, x, y);
      if (!got.is_zero()) {
        report_cone_failure(
            st, "support-constraints", label, c,
            json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}},
            "0", rational_to_json(got), [x, y](const Cone& s) {
              const QMatrix& sp = s.lattice().face(s.top_face_index()).span;
              bool xin = s.is_full_dim() || in_row_span(sp, x);
              bool yperp = true;
              for (int j = 0; j < s.lineality_basis().rows(); ++j) {
                if (!dot(s.lineality_basis().row(j), y).is_zero()) {
                  yperp = false;
                  break;
                }
              }
              if (xin && yperp) return false;
              return !gamma_point(s, x, y).is_zero();
            });
        return;
      }
    }
  });
}

void suite_positive_pairing(SuiteState& st, int trials) {
  const GeneratorProfile& pr = st.report.profile;
  long bound = pr.coord_bound;
  auto visit = [&](const Cone& c, Rng& rng, const std::string& label) {
    if (!c.is_pointed() || !c.is_full_dim()) {
      st.bump("skipped-degenerate");
      return;
    }
    st.bump("nondegenerate-cones");
    for (int k = 0; k < 50 && !st.aborted; ++k) {
      QVector x = general_position_point(c, rng, bound);
      QVector y = general_position_point(c, rng, bound);
      Rational pairing = dot(x, y);
      if (pairing.is_zero()) {
        st.bump("skipped-orthogonal");
        continue;
      }
      if (pairing.sign() < 0) y = -y;
      st.bump("positive-pairs");
      Rational got = gamma_point(c, x, y);
      if (!got.is_zero()) {
        report_cone_failure(
            st, "positive-pairing-vanishing", label, c,
            json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}}, "0",
            rational_to_json(got), [x, y](const Cone& s) {
              if (!s.is_pointed() || !s.is_full_dim()) return false;
              if (dot(x, y).sign() <= 0) return false;
              return !gamma_point(s, x, y).is_zero();
            });
        return;
      }
    }
  };
  int k = 0;
  for (int d = 1; d <= pr.dim && !st.aborted; ++d) {
    for (const Cone& c : degenerate_catalog(d)) {
      if (st.aborted) return;
      Rng rng(derive_seed(st.master, 0x10000u + static_cast<std::uint64_t>(k)));
      st.bump("catalog-cones");
      visit(c, rng, "catalog/d" + std::to_string(d) + "/" + std::to_string(k));
      ++k;
    }
  }
  for (int t = 0; t < trials && !st.aborted; ++t) {
    Rng rng(derive_seed(st.master, static_cast<std::uint64_t>(t)));
    int d = 1 + t % pr.dim;
    Cone c = random_cone(d, GenMode::PointedFull, pr.generator_bound,
                         pr.coord_bound, rng);
    st.bump("random-cones");
    st.bump("dim-" + std::to_string(d));
    visit(c, rng, "trial/" + std::to_string(t));
  }
}

void suite_quadratic_form(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    for (int k = 0; k < 20 && !st.aborted; ++k) {
      QVector y = random_point(dim, bound, rng);
      QVector x = random_point(dim, bound, rng);
      if (k % 3 == 2 && !x.is_zero()) {
        // Push the point far out so the quadratic form goes positive.
        Rational t = dot(x, y).abs() / dot(x, x) + Rational(2);
        x = t * x;
      }
      Rational form = dot(x, x - y);
      if (form.sign() <= 0) {
        st.bump("inside-ball-pairs");
        continue;
      }
      st.bump("outside-ball-pairs");
      Rational got = gamma_y_eval(c, y, x);
      if (!got.is_zero()) {
        report_cone_failure(
            st, "quadratic-form-vanishing", label, c,
            json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}}, "0",
            rational_to_json(got), [x, y](const Cone& s) {
              return !gamma_y_eval(s, y, x).is_zero();
            });
        return;
      }
    }
  });
}

void suite_gambound(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    QVector y = random_point(dim, bound, rng);
    if (rng.chance(1, 5)) {
      y = QVector(dim);
      st.bump("zero-parameter");
    }
    int outside = 0;
    for (int k = 0; k < 400 && outside < 200 && !st.aborted; ++k) {
      QVector x = random_point(dim, bound, rng);
      Rational form = dot(x, x - y);
      if (form.sign() > 0) {
        ++outside;
        st.bump("outside-ball");
        Rational got = gamma_y_eval(c, y, x);
        if (!got.is_zero()) {
          report_cone_failure(
              st, "ball-support", label, c,
              json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}}, "0",
              rational_to_json(got), [x, y](const Cone& s) {
                return !gamma_y_eval(s, y, x).is_zero();
              });
          return;
        }
      } else {
        st.bump("inside-ball");
      }
    }
    // Points exactly on the sphere: the endpoints of the parameter segment
    // and midpoints against equal-length reflections of the parameter.
    std::vector<QVector> boundary = {QVector(dim), y};
    {
      QVector rev(dim);
      for (int i = 0; i < dim; ++i) rev[i] = y[dim - 1 - i];
      QVector flip = y;
      flip[0] = -flip[0];
      for (const QVector& w : {rev, -rev, flip}) {
        boundary.push_back(Rational(1, 2) * (y + w));
      }
    }
    for (const QVector& x : boundary) {
      Rational form = dot(x, x - y);
      if (!form.is_zero()) {
        st.fail("boundary-construction",
                fail_details(label, c,
                             json{{"x", vector_to_json(x)},
                                  {"y", vector_to_json(y)}},
                             "0", rational_to_json(form)));
        return;
      }
      st.bump("boundary-points");
      if (!gamma_y_eval(c, y, x).is_zero()) st.bump("boundary-nonzero");
    }
  });
}

void suite_main_cut(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    QVector y = random_point(dim, bound, rng);
    QVector h = random_nonzero_integer_vector(rng, dim, bound);
    const CutResult parts = cut(c, h);
    st.bump("cuts");

    std::vector<QVector> pts;
    if (dim <= 2) {
      // Every relatively open face of the region's wall arrangement,
      // witnessed from the inside.
      CellDecomposition dec = gamma_region(c, y);
      for (const ArrangementFace& f :
           enumerate_arrangement_faces(dim, dec.walls)) {
        auto w = relint_witness(f.cell);
        if (!w) {
          st.fail("arrangement-witness",
                  fail_details(label, c, json{{"y", vector_to_json(y)}},
                               "witness", "none"));
          return;
        }
        pts.push_back(*w);
      }
      st.bump("witness-points", static_cast<long>(pts.size()));
    } else {
      for (const Cone* part : {&c, &parts.plus, &parts.minus, &parts.slice}) {
        for (const QVector& p : structured_points(*part, rng, 6, bound)) {
          pts.push_back(p);
        }
      }
      st.bump("structured-points", static_cast<long>(pts.size()));
    }
    for (int k = 0; k < 100; ++k) pts.push_back(random_point(dim, bound, rng));
    st.bump("random-points", 100);

    FormalSum cells = gamma_y_term_sum(c, y);
    for (const QVector& p : pts) {
      Rational whole = st.gamma_y(c, y, p);
      Rational pieces = st.gamma_y(parts.plus, y, p) +
                        st.gamma_y(parts.minus, y, p);
      if (!st.faults.drop_cut_slice) pieces -= st.gamma_y(parts.slice, y, p);
      if (whole != pieces) {
        report_cone_failure(
            st, "cut-additivity", label, c,
            json{{"hyperplane", vector_to_json(h)},
                 {"y", vector_to_json(y)},
                 {"x", vector_to_json(p)}},
            rational_to_json(whole), rational_to_json(pieces),
            [h, y, p](const Cone& s) {
              CutResult cs = cut(s, h);
              Rational lhs = gamma_y_eval(s, y, p);
              Rational rhs = gamma_y_eval(cs.plus, y, p) +
                             gamma_y_eval(cs.minus, y, p) -
                             gamma_y_eval(cs.slice, y, p);
              return lhs != rhs;
            });
        return;
      }
      // The pointwise evaluator agrees with its formal cell expansion.
      Rational via_cells = cells.evaluate(p);
      if (whole != via_cells) {
        st.fail("evaluator-cell-form",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"x", vector_to_json(p)}},
                             rational_to_json(via_cells),
                             rational_to_json(whole)));
        return;
      }
      if (!whole.is_zero()) st.bump("nonzero-values");
    }

    // Termwise evaluation over a formal cone sum matches the whole cone.
    ConeSum sum = {{Rational(1), parts.plus},
                   {Rational(1), parts.minus},
                   {Rational(-1), parts.slice}};
    const QVector& probe = pts.front();
    if (gamma_y_on_sum(sum, y, probe) != gamma_y_eval(c, y, probe)) {
      st.fail("sum-of-cones",
              fail_details(label, c,
                           json{{"hyperplane", vector_to_json(h)},
                                {"y", vector_to_json(y)},
                                {"x", vector_to_json(probe)}},
                           rational_to_json(gamma_y_eval(c, y, probe)),
                           rational_to_json(gamma_y_on_sum(sum, y, probe))));
    }
  });
}

void suite_open_cut(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    QVector y = random_point(dim, bound, rng);
    QVector h = random_nonzero_integer_vector(rng, dim, bound);
    CutResult parts = cut(c, h);
    st.bump("cuts");
    std::vector<QVector> pts = structured_points(c, rng, 50, bound);
    for (const QVector& p : pts) {
      Rational whole = gamma_prime_y_eval(c, y, p);
      Rational pieces = gamma_prime_y_eval(parts.plus, y, p) +
                        gamma_prime_y_eval(parts.minus, y, p) -
                        gamma_prime_y_eval(parts.slice, y, p);
      if (whole != pieces) {
        report_cone_failure(
            st, "open-valuation-cut", label, c,
            json{{"hyperplane", vector_to_json(h)},
                 {"y", vector_to_json(y)},
                 {"x", vector_to_json(p)}},
            rational_to_json(whole), rational_to_json(pieces),
            [h, y, p](const Cone& s) {
              CutResult cs = cut(s, h);
              Rational lhs = gamma_prime_y_eval(s, y, p);
              Rational rhs = gamma_prime_y_eval(cs.plus, y, p) +
                             gamma_prime_y_eval(cs.minus, y, p) -
                             gamma_prime_y_eval(cs.slice, y, p);
              return lhs != rhs;
            });
        return;
      }
      if (!whole.is_zero()) st.bump("nonzero-values");
    }
  });
}

void suite_reciprocity(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    int dim = c.ambient_dim();
    long bound = st.report.profile.coord_bound;
    QVector y = random_point(dim, bound, rng);
    std::vector<QVector> pts = structured_points(c, rng, 50, bound);
    pts.push_back(y);
    Cone neg = c.negated();
    Rational pc = Rational(c.parity());
    for (const QVector& p : pts) {
      Rational lhs = reciprocity_lhs(c, y, p);
      Rational rhs = reciprocity_rhs(c, y, p);
      if (lhs != rhs) {
        report_cone_failure(
            st, "open-reciprocity", label, c,
            json{{"y", vector_to_json(y)}, {"x", vector_to_json(p)}},
            rational_to_json(rhs), rational_to_json(lhs),
            [y, p](const Cone& s) {
              return reciprocity_lhs(s, y, p) != reciprocity_rhs(s, y, p);
            });
        return;
      }
      // The whole expansion collapses to the parity times the value on the
      // negated cone.
      Rational collapse = pc * gamma_y_eval(neg, y, p);
      if (lhs != collapse) {
        st.fail("reciprocity-collapse",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"x", vector_to_json(p)}},
                             rational_to_json(collapse),
                             rational_to_json(lhs)));
        return;
      }
      if (!lhs.is_zero()) st.bump("nonzero-values");
    }
  });
}

void suite_projection(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    long bound = st.report.profile.coord_bound;
    std::vector<QVector> pts = structured_points(c, rng, 50, bound);
    st.bump("origin-points");  // the first structured point is always 0
    for (const QVector& x : pts) {
      QuadrupleCheck r = projection_identities_check(c, x);
      if (r.all_ok()) {
        st.bump("points");
        continue;
      }
      int bad = 0;
      while (r.ok[bad]) ++bad;
      report_cone_failure(
          st, "projection-identity-" + std::to_string(bad + 1), label, c,
          json{{"x", vector_to_json(x)}}, rational_to_json(r.rhs[bad]),
          rational_to_json(r.lhs[bad]), [x](const Cone& s) {
            return !projection_identities_check(s, x).all_ok();
          });
      return;
    }
  });
}

void suite_angle_def(SuiteState& st, int trials) {
  for_each_cone(st, trials, [&](const Cone& c, Rng& rng,
                                const std::string& label) {
    if (c.face_count() > 20) {
      st.bump("skipped-many-faces");
      return;
    }
    for (int i = 0; i < c.face_count() && !st.aborted; ++i) {
      QVector z = relint_point(c.face_cone(i));
      Cone brute = brute_force_angle(c, i);
      if (!(c.angle_cone(i) == brute)) {
        st.fail("angle-hrep",
                fail_details(label, c, json{{"face", i}}, cone_to_json(brute),
                             cone_to_json(c.angle_cone(i))));
        return;
      }
      // Forward: directions a(x - z) with x in the cone and a > 0 satisfy
      // the angle cone's constraints.
      const Rational scales[] = {Rational(1), Rational(2), Rational(1, 2)};
      for (int k = 0; k < 5; ++k) {
        QVector x = cone_point(c, rng);
        QVector w = scales[k % 3] * (x - z);
        if (!c.angle_contains(i, w)) {
          st.fail("angle-forward",
                  fail_details(label, c,
                               json{{"face", i},
                                    {"x", vector_to_json(x)},
                                    {"z", vector_to_json(z)}},
                               "inside", "outside"));
          return;
        }
        st.bump("definitional-points");
      }
      // Reverse: every point of the angle cone is such a direction, seen by
      // stepping from z a small exact distance.
      const Cone& angle = c.angle_cone(i);
      for (int k = 0; k < 5; ++k) {
        QVector w = cone_point(angle, rng);
        Rational eps(1);
        bool capped = false;
        for (std::size_t fn = 0; fn < c.facet_normals().size(); ++fn) {
          if (c.lattice().face(i).active & (std::uint64_t{1} << fn)) continue;
          const QVector& n = c.facet_normals()[fn];
          Rational d = dot(n, w);
          if (d.sign() >= 0) continue;
          Rational limit = dot(n, z) / -d;
          if (!capped || limit < eps) {
            eps = limit;
            capped = true;
          }
        }
        if (capped) eps = eps / Rational(2);
        if (!c.contains(z + eps * w)) {
          st.fail("angle-reverse",
                  fail_details(label, c,
                               json{{"face", i},
                                    {"w", vector_to_json(w)},
                                    {"z", vector_to_json(z)},
                                    {"step", rational_to_json(eps)}},
                               "inside", "outside"));
          return;
        }
        st.bump("reverse-points");
      }
    }
  });
}

void suite_region(SuiteState& st, int trials) {
  const GeneratorProfile& pr = st.report.profile;
  long bound = pr.coord_bound;
  auto visit = [&](const Cone& c, Rng& rng, const std::string& label) {
    int dim = c.ambient_dim();
    QVector y = random_point(dim, bound, rng);
    if (rng.chance(1, 6)) {
      y = QVector(dim);
      st.bump("zero-parameter");
    }
    CellDecomposition dec = gamma_region(c, y);
    st.bump("regions");
    st.bump("cells", static_cast<long>(dec.cells.size()));

    std::vector<QVector> probes;
    for (const RegionCell& cell : dec.cells) {
      if (cell.value.is_zero()) {
        st.fail("zero-valued-cell",
                fail_details(label, c, json{{"y", vector_to_json(y)}},
                             "nonzero", "0"));
        return;
      }
      if (!cell.cell.contains(cell.witness)) {
        st.fail("witness-outside-cell",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"witness", vector_to_json(cell.witness)}},
                             "inside", "outside"));
        return;
      }
      if (!is_bounded(cell.cell)) {
        st.fail("unbounded-support-cell",
                fail_details(label, c, json{{"y", vector_to_json(y)}},
                             "bounded", "unbounded"));
        return;
      }
      // The support stays inside the closed ball over the parameter segment.
      if (dot(cell.witness, cell.witness - y).sign() > 0) {
        st.fail("support-outside-ball",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"witness", vector_to_json(cell.witness)}},
                             "inside ball", "outside"));
        return;
      }
      const QVector extra1 = interior_point_of_cell(cell.cell, cell.witness, rng);
      const QVector extra2 = interior_point_of_cell(cell.cell, cell.witness, rng);
      for (const QVector* p : {&cell.witness, &extra1, &extra2}) {
        Rational val = gamma_y_eval(c, y, *p);
        if (val != cell.value) {
          st.fail("cell-value",
                  fail_details(label, c,
                               json{{"y", vector_to_json(y)},
                                    {"x", vector_to_json(*p)}},
                               rational_to_json(cell.value),
                               rational_to_json(val)));
          return;
        }
        st.bump("cell-value-points");
      }
      probes.push_back(cell.witness);
    }
    for (int k = 0; k < 10; ++k) {
      probes.push_back(random_point(dim, bound, rng));
    }
    for (const QVector& p : probes) {
      Rational total(0);
      int covering = 0;
      for (const RegionCell& cell : dec.cells) {
        if (cell.cell.contains(p)) {
          total += cell.value;
          ++covering;
        }
      }
      if (covering > 1) {
        st.fail("cells-overlap",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"x", vector_to_json(p)}},
                             1, covering));
        return;
      }
      Rational direct = gamma_y_eval(c, y, p);
      if (total != direct) {
        st.fail("decomposition-evaluates",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"x", vector_to_json(p)}},
                             rational_to_json(direct),
                             rational_to_json(total)));
        return;
      }
      st.bump("decomposition-points");
    }
  };
  int maxd = std::min(pr.dim, 3);
  int k = 0;
  for (int d = 1; d <= maxd && !st.aborted; ++d) {
    for (const Cone& c : degenerate_catalog(d)) {
      if (st.aborted) return;
      Rng rng(derive_seed(st.master, 0x10000u + static_cast<std::uint64_t>(k)));
      st.bump("catalog-cones");
      visit(c, rng, "catalog/d" + std::to_string(d) + "/" + std::to_string(k));
      ++k;
    }
  }
  for (int t = 0; t < trials && !st.aborted; ++t) {
    Rng rng(derive_seed(st.master, static_cast<std::uint64_t>(t)));
    static const int pattern[] = {1, 2, 2, 3};
    int d = std::min(pattern[t % 4], maxd);
    GenMode mode =
        pr.mode == GenMode::Mixed ? pick_concrete_mode(rng) : pr.mode;
    Cone c = random_cone(d, mode, pr.generator_bound, pr.coord_bound, rng);
    st.bump("random-cones");
    st.bump("dim-" + std::to_string(d));
    visit(c, rng, "trial/" + std::to_string(t));
  }
}

void suite_planar_region(SuiteState& st, int trials) {
  const GeneratorProfile& pr = st.report.profile;
  auto visit = [&](const Cone& c, const QVector& y, const std::string& label) {
    if (!c.contains(y) || !c.dual_contains(y)) {
      st.fail("parameter-construction",
              fail_details(label, c, json{{"y", vector_to_json(y)}},
                           "y in C and C*", "outside"));
      return;
    }
    CellDecomposition dec = gamma_region(c, y);
    st.bump("regions");

    // Membership in C ∩ (y − relint C*).
    auto in_target = [&](const QVector& p) {
      return c.contains(p) && c.dual_relint_contains(y - p);
    };

    for (const RegionCell& cell : dec.cells) {
      if (cell.value != Rational(1)) {
        st.fail("unit-values",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"witness", vector_to_json(cell.witness)}},
                             "1", rational_to_json(cell.value)));
        return;
      }
      if (!in_target(cell.witness)) {
        st.fail("cell-outside-target",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"witness", vector_to_json(cell.witness)}},
                             "inside", "outside"));
        return;
      }
      st.bump("cells");
    }

    // The region walls refine the target's boundary, so target membership
    // is constant on arrangement faces: witnesses decide the partition
    // exactly.
    for (const ArrangementFace& f :
         enumerate_arrangement_faces(2, dec.walls)) {
      auto w = relint_witness(f.cell);
      if (!w) {
        st.fail("arrangement-witness",
                fail_details(label, c, json{{"y", vector_to_json(y)}},
                             "witness", "none"));
        return;
      }
      bool want = in_target(*w);
      int covering = 0;
      for (const RegionCell& cell : dec.cells) {
        if (cell.cell.contains(*w)) ++covering;
      }
      if (covering != (want ? 1 : 0)) {
        st.fail("target-partition",
                fail_details(label, c,
                             json{{"y", vector_to_json(y)},
                                  {"x", vector_to_json(*w)}},
                             want ? 1 : 0, covering));
        return;
      }
      st.bump("arrangement-faces");
    }

    // 40x40 exact rational grid over a box certainly containing the ball
    // that bounds the support.
    Rational m = y[0].abs() + y[1].abs() + Rational(1);
    Rational step = Rational(2) * m / Rational(39);
    for (int gi = 0; gi < 40 && !st.aborted; ++gi) {
      for (int gj = 0; gj < 40; ++gj) {
        QVector p{-m + Rational(gi) * step, -m + Rational(gj) * step};
        Rational direct = st.gamma_y(c, y, p);
        Rational want = in_target(p) ? Rational(1) : Rational(0);
        if (direct != want) {
          st.fail("closed-form-grid",
                  fail_details(label, c,
                               json{{"y", vector_to_json(y)},
                                    {"x", vector_to_json(p)}},
                               rational_to_json(want),
                               rational_to_json(direct)));
          return;
        }
        Rational via_cells(0);
        for (const RegionCell& cell : dec.cells) {
          if (cell.cell.contains(p)) via_cells += cell.value;
        }
        if (via_cells != want) {
          st.fail("grid-vs-cells",
                  fail_details(label, c,
                               json{{"y", vector_to_json(y)},
                                    {"x", vector_to_json(p)}},
                               rational_to_json(want),
                               rational_to_json(via_cells)));
          return;
        }
        if (!want.is_zero()) st.bump("grid-hits");
      }
    }
    st.bump("grids");
  };

  // Fixed configurations run first so mutation failures surface immediately.
  {
    Cone wedge = Cone::from_vrep(
        2, {QVector{Rational(1), Rational(0)}, QVector{Rational(1), Rational(1)}},
        {});
    visit(wedge, QVector{Rational(2), Rational(1)}, "fixed/0");
    if (st.aborted) return;
    Cone tilted = Cone::from_vrep(
        2,
        {QVector{Rational(1), Rational(0)}, QVector{Rational(-2), Rational(3)}},
        {});
    visit(tilted, QVector{Rational(1, 4), Rational(3, 4)}, "fixed/1");
    if (st.aborted) return;
  }
  // Degenerate catalog entries that qualify (pointed and full-dimensional).
  int k = 0;
  for (const Cone& c : degenerate_catalog(2)) {
    if (st.aborted) return;
    if (!c.is_pointed() || !c.is_full_dim()) {
      st.bump("skipped-degenerate");
      ++k;
      continue;
    }
    Rng rng(derive_seed(st.master, 0x10000u + static_cast<std::uint64_t>(k)));
    Cone meet = Cone::from_hrep(2, [&] {
      std::vector<QVector> normals = c.hrep_normals();
      for (const auto& n : c.dual().hrep_normals()) normals.push_back(n);
      return normals;
    }());
    QVector y = relint_point(meet);
    st.bump("catalog-cones");
    visit(c, y, "catalog/d2/" + std::to_string(k));
    ++k;
  }
  for (int t = 0; t < trials && !st.aborted; ++t) {
    Rng rng(derive_seed(st.master, static_cast<std::uint64_t>(t)));
    Cone c = random_cone(2, GenMode::PointedFull, pr.generator_bound,
                         pr.coord_bound, rng);
    // Parameter in the relative interior of C ∩ C*, scaled through a few
    // magnitudes.
    std::vector<QVector> normals = c.hrep_normals();
    for (const auto& n : c.dual().hrep_normals()) normals.push_back(n);
    Cone meet = Cone::from_hrep(2, normals);
    QVector y = relint_point(meet);
    const Rational scales[] = {Rational(1), Rational(1, 2), Rational(2)};
    y = scales[t % 3] * y;
    st.bump("random-cones");
    visit(c, y, "trial/" + std::to_string(t));
  }
}

using SuiteFn = void (*)(SuiteState&, int);

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"dd-roundtrip", suite_dd_roundtrip},
    {"face-oracle", suite_face_oracle},
    {"euler", suite_euler},
    {"indicator-cut", suite_indicator_cut},
    {"angle-correspondence", suite_angle_correspondence},
    {"face-expansion", suite_face_expansion},
    {"special-values", suite_special_values},
    {"positive-pairing", suite_positive_pairing},
    {"quadratic-form", suite_quadratic_form},
    {"gambound", suite_gambound},
    {"main-cut", suite_main_cut},
    {"open-cut", suite_open_cut},
    {"reciprocity", suite_reciprocity},
    {"projection", suite_projection},
    {"angle-def", suite_angle_def},
    {"region", suite_region},
    {"planar-region", suite_planar_region},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : kSuites) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_suite(const std::string& name, const GeneratorProfile& profile,
                      int trials, const FaultInjection& faults) {
  if (profile.dim < 1 || profile.dim > 5) {
    throw UsageError("profile dimension must be 1..5");
  }
  if (profile.coord_bound < 1 || profile.coord_bound > 8) {
    throw UsageError("profile coordinate bound must be 1..8");
  }
  if (profile.generator_bound < 1) {
    throw UsageError("profile generator bound must be positive");
  }
  if (trials < 0) throw UsageError("trial count must be nonnegative");

  if (name == "all") {
    CheckReport agg;
    agg.suite = "all";
    agg.profile = profile;
    for (const std::string& n : suite_names()) {
      CheckReport r = run_suite(n, profile, trials, faults);
      agg.trials += r.trials;
      for (const auto& [key, count] : r.coverage) {
        agg.coverage[n + "/" + key] += count;
      }
      for (Failure& f : r.failures) {
        f.details["suite"] = n;
        agg.failures.push_back(std::move(f));
      }
    }
    return agg;
  }

  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (name != kSuites[i].first) continue;
    SuiteState st;
    st.report.suite = name;
    st.report.profile = profile;
    st.report.trials = trials;
    st.faults = faults;
    st.master = derive_seed(profile.seed, i + 1);
    kSuites[i].second(st, trials);
    return st.report;
  }
  throw UsageError("unknown suite: " + name);
}

}  // namespace coneval
