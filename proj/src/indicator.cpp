#include "coneval/indicator.hpp"

#include <algorithm>
#include <map>

namespace coneval {

namespace {

// Order for canonical sorting of condition lists.
int cond_compare(const AffineCondition& a, const AffineCondition& b) {
  int c = lex_compare(a.normal, b.normal);
  if (c != 0) return c;
  if (a.offset < b.offset) return -1;
  if (b.offset < a.offset) return 1;
  return static_cast<int>(a.rel) - static_cast<int>(b.rel);
}

bool cond_less(const AffineCondition& a, const AffineCondition& b) {
  return cond_compare(a, b) < 0;
}

int cell_compare(const GeneralizedPolyhedron& a,
                 const GeneralizedPolyhedron& b) {
  const auto& ca = a.conditions();
  const auto& cb = b.conditions();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    int c = cond_compare(ca[i], cb[i]);
    if (c != 0) return c;
  }
  return 0;
}

// "<0, v> - offset REL 0" as a truth value.
bool constant_holds(const Rational& offset, Rel rel) {
  int s = (-offset).sign();
  switch (rel) {
    case Rel::Ge:
      return s >= 0;
    case Rel::Gt:
      return s > 0;
    case Rel::Eq:
      return s == 0;
  }
  return false;
}

}  // namespace

bool AffineCondition::holds_at(const QVector& v) const {
  int s = (dot(normal, v) - offset).sign();
  switch (rel) {
    case Rel::Ge:
      return s >= 0;
    case Rel::Gt:
      return s > 0;
    case Rel::Eq:
      return s == 0;
  }
  return false;
}

AffineCondition AffineCondition::negated_set() const {
  return {-normal, offset, rel};
}

AffineCondition AffineCondition::translated(const QVector& t) const {
  return {normal, offset + dot(normal, t), rel};
}

AffineCondition AffineCondition::canonical() const {
  QVector joint(normal.dim() + 1);
  for (int i = 0; i < normal.dim(); ++i) joint[i] = normal[i];
  joint[normal.dim()] = offset;
  joint = primitive_positive(joint);
  AffineCondition out;
  out.normal = QVector(normal.dim());
  for (int i = 0; i < normal.dim(); ++i) out.normal[i] = joint[i];
  out.offset = joint[normal.dim()];
  out.rel = rel;
  return out;
}

void GeneralizedPolyhedron::add(const AffineCondition& c) {
  if (c.normal.dim() != dim_) throw UsageError("condition dimension mismatch");
  AffineCondition cc = c.canonical();
  if (cc.normal.is_zero()) {
    if (!constant_holds(cc.offset, cc.rel)) trivially_empty_ = true;
    return;
  }
  if (std::find(conds_.begin(), conds_.end(), cc) == conds_.end()) {
    conds_.push_back(cc);
  }
}

bool GeneralizedPolyhedron::contains(const QVector& v) const {
  if (v.dim() != dim_) throw UsageError("point dimension mismatch");
  if (trivially_empty_) return false;
  for (const auto& c : conds_) {
    if (!c.holds_at(v)) return false;
  }
  return true;
}

GeneralizedPolyhedron GeneralizedPolyhedron::translated(
    const QVector& t) const {
  if (t.dim() != dim_) throw UsageError("translation dimension mismatch");
  GeneralizedPolyhedron out(dim_);
  out.trivially_empty_ = trivially_empty_;
  for (const auto& c : conds_) out.add(c.translated(t));
  return out;
}

GeneralizedPolyhedron GeneralizedPolyhedron::negated_set() const {
  GeneralizedPolyhedron out(dim_);
  out.trivially_empty_ = trivially_empty_;
  for (const auto& c : conds_) out.add(c.negated_set());
  return out;
}

GeneralizedPolyhedron GeneralizedPolyhedron::intersect(
    const GeneralizedPolyhedron& o) const {
  if (o.dim_ != dim_) throw UsageError("intersection dimension mismatch");
  GeneralizedPolyhedron out = *this;
  out.trivially_empty_ = trivially_empty_ || o.trivially_empty_;
  for (const auto& c : o.conds_) out.add(c);
  return out;
}

bool is_feasible(const GeneralizedPolyhedron& p) {
  if (p.trivially_empty()) return false;
  int dim = p.dim();
  std::vector<AffineCondition> conds = p.conditions();

  // Folds zero-normal rows into constant checks; returns false on a violated
  // constant.
  auto simplify = [&](std::vector<AffineCondition>& list) {
    std::vector<AffineCondition> keep;
    for (auto& c : list) {
      if (c.normal.is_zero()) {
        if (!constant_holds(c.offset, c.rel)) return false;
      } else {
        keep.push_back(c.canonical());
      }
    }
    list = std::move(keep);
    return true;
  };
  if (!simplify(conds)) return false;

  // Equalities first: substitute them away exactly.
  for (;;) {
    std::size_t eq = conds.size();
    for (std::size_t i = 0; i < conds.size(); ++i) {
      if (conds[i].rel == Rel::Eq) {
        eq = i;
        break;
      }
    }
    if (eq == conds.size()) break;
    AffineCondition e = conds[eq];
    conds.erase(conds.begin() + static_cast<std::ptrdiff_t>(eq));
    int j = 0;
    while (e.normal[j].is_zero()) ++j;
    for (auto& c : conds) {
      if (c.normal[j].is_zero()) continue;
      Rational f = c.normal[j] / e.normal[j];
      c.normal -= f * e.normal;
      c.offset -= f * e.offset;
    }
    if (!simplify(conds)) return false;
  }

  // Variable elimination with duplicate and dominance pruning.
  auto prune = [&](std::vector<AffineCondition>& list) {
    std::map<std::vector<Rational>, AffineCondition> best;
    for (const auto& c : list) {
      std::vector<Rational> key(c.normal.begin(), c.normal.end());
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), c);
        continue;
      }
      AffineCondition& cur = it->second;
      if (c.offset > cur.offset ||
          (c.offset == cur.offset && c.rel == Rel::Gt)) {
        cur = c;
      }
    }
    list.clear();
    for (auto& [_, c] : best) list.push_back(c);
  };
  prune(conds);

  for (int j = 0; j < dim; ++j) {
    std::vector<AffineCondition> lowers, uppers, rest;
    for (auto& c : conds) {
      int s = c.normal[j].sign();
      if (s > 0) {
        lowers.push_back(c);
      } else if (s < 0) {
        uppers.push_back(c);
      } else {
        rest.push_back(c);
      }
    }
    if (lowers.empty() || uppers.empty()) {
      conds = std::move(rest);
      continue;
    }
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        Rational a = -up.normal[j];
        Rational b = lo.normal[j];
        AffineCondition c;
        c.normal = a * lo.normal + b * up.normal;
        c.offset = a * lo.offset + b * up.offset;
        c.rel = (lo.rel == Rel::Gt || up.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
        if (c.normal.is_zero()) {
          if (!constant_holds(c.offset, c.rel)) return false;
        } else {
          rest.push_back(c.canonical());
        }
      }
    }
    conds = std::move(rest);
    prune(conds);
  }
  return true;
}

bool is_bounded(const GeneralizedPolyhedron& p) {
  if (!is_feasible(p)) return true;
  std::vector<QVector> normals;
  for (const auto& c : p.conditions()) {
    normals.push_back(c.normal);
    if (c.rel == Rel::Eq) normals.push_back(-c.normal);
  }
  Cone rec = Cone::from_hrep(p.dim(), normals);
  return rec.dim() == 0;
}

GeneralizedPolyhedron closed_cell(const Cone& c) {
  GeneralizedPolyhedron out(c.ambient_dim());
  for (int i = 0; i < c.span_complement_basis().rows(); ++i) {
    out.add({c.span_complement_basis().row(i), Rational(0), Rel::Eq});
  }
  for (const auto& n : c.facet_normals()) {
    out.add({n, Rational(0), Rel::Ge});
  }
  return out;
}

GeneralizedPolyhedron relint_cell(const Cone& c) {
  GeneralizedPolyhedron out(c.ambient_dim());
  for (int i = 0; i < c.span_complement_basis().rows(); ++i) {
    out.add({c.span_complement_basis().row(i), Rational(0), Rel::Eq});
  }
  for (const auto& n : c.facet_normals()) {
    out.add({n, Rational(0), Rel::Gt});
  }
  return out;
}

Cone cone_of_cell(const GeneralizedPolyhedron& p) {
  if (p.trivially_empty()) {
    throw UnsupportedInputError("cell is empty, not a cone");
  }
  std::vector<QVector> normals;
  for (const auto& c : p.conditions()) {
    if (!c.offset.is_zero()) {
      throw UnsupportedInputError("cell has a non-homogeneous condition");
    }
    if (c.rel == Rel::Gt) {
      throw UnsupportedInputError("cell has a strict condition");
    }
    normals.push_back(c.normal);
    if (c.rel == Rel::Eq) normals.push_back(-c.normal);
  }
  return Cone::from_hrep(p.dim(), normals);
}

void FormalSum::append(Rational coeff, GeneralizedPolyhedron cell) {
  if (cell.dim() != dim_) throw UsageError("term dimension mismatch");
  if (coeff.is_zero() || cell.trivially_empty()) return;
  terms_.push_back({std::move(coeff), std::move(cell)});
}

Rational FormalSum::evaluate(const QVector& v) const {
  Rational s;
  for (const auto& t : terms_) {
    if (t.cell.contains(v)) s += t.coeff;
  }
  return s;
}

namespace {

// Sorts each cell's conditions, merges identical cells, drops zero terms.
std::vector<Term> merged(std::vector<Term> terms, int dim) {
  struct CellLess {
    bool operator()(const GeneralizedPolyhedron& a,
                    const GeneralizedPolyhedron& b) const {
      return cell_compare(a, b) < 0;
    }
  };
  std::map<GeneralizedPolyhedron, Rational, CellLess> acc;
  for (auto& t : terms) {
    GeneralizedPolyhedron cell(dim);
    auto conds = t.cell.conditions();
    std::sort(conds.begin(), conds.end(), cond_less);
    for (const auto& c : conds) cell.add(c);
    acc[cell] += t.coeff;
  }
  std::vector<Term> out;
  for (auto& [cell, coeff] : acc) {
    if (!coeff.is_zero()) out.push_back({coeff, cell});
  }
  return out;
}

}  // namespace

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  if (o.dim_ != dim_) throw UsageError("formal sum dimension mismatch");
  for (const auto& t : o.terms_) terms_.push_back(t);
  terms_ = merged(std::move(terms_), dim_);
  return *this;
}

FormalSum FormalSum::scaled(const Rational& s) const {
  FormalSum out(dim_);
  if (s.is_zero()) return out;
  for (const auto& t : terms_) out.append(s * t.coeff, t.cell);
  return out;
}

FormalSum FormalSum::translated(const QVector& t) const {
  FormalSum out(dim_);
  for (const auto& term : terms_) {
    out.append(term.coeff, term.cell.translated(t));
  }
  return out;
}

FormalSum FormalSum::negated_set() const {
  FormalSum out(dim_);
  for (const auto& term : terms_) {
    out.append(term.coeff, term.cell.negated_set());
  }
  return out;
}

FormalSum FormalSum::product(const FormalSum& o) const {
  if (o.dim_ != dim_) throw UsageError("formal sum dimension mismatch");
  FormalSum out(dim_);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      out.append(a.coeff * b.coeff, a.cell.intersect(b.cell));
    }
  }
  out.terms_ = merged(std::move(out.terms_), dim_);
  return out;
}

FormalSum indicator(const Cone& c) {
  FormalSum s(c.ambient_dim());
  s.append(Rational(1), closed_cell(c));
  return s;
}

FormalSum relint_indicator(const Cone& c) {
  FormalSum s(c.ambient_dim());
  s.append(Rational(1), relint_cell(c));
  return s;
}

Rational euler_char(const FormalSum& s) {
  for (const auto& t : s.terms()) {
    for (const auto& c : t.cell.conditions()) {
      if (c.rel == Rel::Gt) {
        throw UnsupportedInputError(
            "Euler characteristic needs closed conditions");
      }
    }
  }
  Rational chi;
  for (const auto& t : s.terms()) {
    if (is_feasible(t.cell)) chi += t.coeff;
  }
  return chi;
}

FormalSum dual_map(const FormalSum& s) {
  FormalSum out(s.dim());
  for (const auto& t : s.terms()) {
    out.append(t.coeff, closed_cell(cone_of_cell(t.cell).dual()));
  }
  return out;
}

namespace {

// Cell for a lattice face of c: active facets pinned to zero, the rest kept
// either closed or strict.
GeneralizedPolyhedron face_cell(const Cone& c, const Face& f, Rel inactive) {
  GeneralizedPolyhedron cell(c.ambient_dim());
  for (int i = 0; i < c.span_complement_basis().rows(); ++i) {
    cell.add({c.span_complement_basis().row(i), Rational(0), Rel::Eq});
  }
  const auto& facets = c.facet_normals();
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    bool active = f.active & (std::uint64_t{1} << fi);
    cell.add({facets[fi], Rational(0), active ? Rel::Eq : inactive});
  }
  return cell;
}

}  // namespace

FormalSum face_relint_partition(const Cone& c) {
  const FaceLattice& lat = c.lattice();
  FormalSum s(c.ambient_dim());
  for (int i = 0; i < lat.size(); ++i) {
    s.append(Rational(1), face_cell(c, lat.face(i), Rel::Gt));
  }
  return s;
}

FormalSum interior_expansion(const Cone& c) {
  const FaceLattice& lat = c.lattice();
  FormalSum s(c.ambient_dim());
  for (int i = 0; i < lat.size(); ++i) {
    int rel = c.dim() - lat.face(i).dim;
    s.append(Rational(rel % 2 == 0 ? 1 : -1),
             face_cell(c, lat.face(i), Rel::Ge));
  }
  return s;
}

}  // namespace coneval
