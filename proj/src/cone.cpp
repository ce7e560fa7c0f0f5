#include "coneval/cone.hpp"

#include <algorithm>

namespace coneval {

namespace {

std::vector<QVector> sorted_unique(std::vector<QVector> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Directions reduced modulo a subspace: project out the span of `sub`, scale
// to primitive, drop zeros, sort.
std::vector<QVector> reduce_mod_subspace(const std::vector<QVector>& dirs,
                                         const QMatrix& sub, int dim) {
  std::vector<QVector> out;
  for (const auto& d : dirs) {
    QVector r = d;
    if (sub.rows() > 0) r -= project_onto_span(sub, r);
    r = primitive_positive(r);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return sorted_unique(std::move(out));
}

QMatrix matrix_in_dim(std::vector<QVector> rows, int dim) {
  QMatrix m(dim);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

constexpr int kMaxLatticeGenerators = 64;

}  // namespace

namespace dd {

VRep vrep_from_hrep(int dim, const std::vector<QVector>& normals_in) {
  if (dim < 1) throw UsageError("ambient dimension must be positive");
  std::vector<QVector> normals;
  normals.reserve(normals_in.size());
  for (const auto& n : normals_in) {
    if (n.dim() != dim) throw UsageError("constraint dimension mismatch");
    if (n.is_zero()) throw UsageError("zero constraint normal");
    normals.push_back(primitive_positive(n));
  }
  normals = sorted_unique(std::move(normals));

  std::vector<QVector> lin;
  for (int i = 0; i < dim; ++i) {
    QVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<QVector> rays;
  std::vector<QVector> processed;

  for (const QVector& a : normals) {
    int l0 = -1;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (!dot(a, lin[i]).is_zero()) {
        l0 = static_cast<int>(i);
        break;
      }
    }
    if (l0 >= 0) {
      // The constraint cuts the lineality space: one basis direction becomes
      // a ray, everything else is shifted into the constraint's hyperplane.
      QVector v0 = lin[static_cast<std::size_t>(l0)];
      Rational s = dot(a, v0);
      if (s.sign() < 0) {
        v0 = -v0;
        s = -s;
      }
      std::vector<QVector> nlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == l0) continue;
        QVector l = lin[i];
        Rational c = dot(a, l) / s;
        if (!c.is_zero()) l -= c * v0;
        nlin.push_back(primitive_canonical(l));
      }
      for (auto& r : rays) {
        Rational c = dot(a, r) / s;
        if (!c.is_zero()) r -= c * v0;
        r = primitive_positive(r);
      }
      rays.push_back(primitive_positive(v0));
      rays = sorted_unique(std::move(rays));
      lin = std::move(nlin);
    } else {
      std::vector<int> pos, neg;
      std::vector<Rational> val(rays.size());
      std::vector<QVector> next;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        val[i] = dot(a, rays[i]);
        int s = val[i].sign();
        if (s > 0) {
          pos.push_back(static_cast<int>(i));
          next.push_back(rays[i]);
        } else if (s == 0) {
          next.push_back(rays[i]);
        } else {
          neg.push_back(static_cast<int>(i));
        }
      }
      if (!neg.empty()) {
        // Extreme rays of the cut cone: survivors plus one combination per
        // adjacent (positive, negative) pair.  Adjacency: the constraints
        // tight at both rays have rank two less than the processed system.
        int target = dim - static_cast<int>(lin.size()) - 2;
        for (int p : pos) {
          for (int n : neg) {
            QMatrix tight(dim);
            for (const auto& q : processed) {
              if (dot(q, rays[static_cast<std::size_t>(p)]).is_zero() &&
                  dot(q, rays[static_cast<std::size_t>(n)]).is_zero()) {
                tight.append_row(q);
              }
            }
            if (rank(tight) != target) continue;
            QVector w = val[static_cast<std::size_t>(p)] *
                            rays[static_cast<std::size_t>(n)] -
                        val[static_cast<std::size_t>(n)] *
                            rays[static_cast<std::size_t>(p)];
            w = primitive_positive(w);
            if (!w.is_zero()) next.push_back(std::move(w));
          }
        }
        rays = sorted_unique(std::move(next));
      }
    }
    processed.push_back(a);
  }
  return {std::move(rays), std::move(lin)};
}

}  // namespace dd

bool FaceLattice::subset(int i, int j) const {
  std::uint64_t ai = faces_[static_cast<std::size_t>(i)].active;
  std::uint64_t aj = faces_[static_cast<std::size_t>(j)].active;
  return (ai & aj) == aj;
}

int FaceLattice::index_of_active(std::uint64_t mask) const {
  auto it = by_active_.find(mask);
  return it == by_active_.end() ? -1 : it->second;
}

Cone Cone::assemble(int dim, const std::vector<QVector>& dual_rays,
                    const std::vector<QVector>& dual_lineality) {
  Cone c;
  c.dim_ = dim;
  c.aff_ = row_space_basis(matrix_in_dim(dual_lineality, dim));
  c.facets_ = reduce_mod_subspace(dual_rays, c.aff_, dim);
  VRep prim = dd::vrep_from_hrep(dim, c.hrep_normals_static());
  c.lin_ = row_space_basis(matrix_in_dim(prim.lineality, dim));
  c.rays_ = reduce_mod_subspace(prim.rays, c.lin_, dim);
  c.finish();
  return c;
}

Cone Cone::from_hrep(int dim, const std::vector<QVector>& normals) {
  VRep prim = dd::vrep_from_hrep(dim, normals);
  Cone c;
  c.dim_ = dim;
  c.lin_ = row_space_basis(matrix_in_dim(prim.lineality, dim));
  c.rays_ = reduce_mod_subspace(prim.rays, c.lin_, dim);
  std::vector<QVector> gens = c.rays_;
  for (int i = 0; i < c.lin_.rows(); ++i) {
    gens.push_back(c.lin_.row(i));
    gens.push_back(-c.lin_.row(i));
  }
  VRep dual = dd::vrep_from_hrep(dim, gens);
  c.aff_ = row_space_basis(matrix_in_dim(dual.lineality, dim));
  c.facets_ = reduce_mod_subspace(dual.rays, c.aff_, dim);
  c.finish();
  for (const auto& n : normals) {
    for (const auto& r : c.rays_) {
      if (dot(n, r).sign() < 0) throw std::logic_error("hrep conversion bug");
    }
    for (int i = 0; i < c.lin_.rows(); ++i) {
      if (!dot(n, c.lin_.row(i)).is_zero()) {
        throw std::logic_error("hrep conversion bug");
      }
    }
  }
  return c;
}

Cone Cone::from_vrep(int dim, const std::vector<QVector>& rays,
                     const std::vector<QVector>& lineality) {
  if (dim < 1) throw UsageError("ambient dimension must be positive");
  std::vector<QVector> gens;
  for (const auto& r : rays) {
    if (r.dim() != dim) throw UsageError("ray dimension mismatch");
    if (r.is_zero()) throw UsageError("zero ray");
    gens.push_back(primitive_positive(r));
  }
  for (const auto& l : lineality) {
    if (l.dim() != dim) throw UsageError("lineality dimension mismatch");
    if (l.is_zero()) continue;
    gens.push_back(primitive_positive(l));
    gens.push_back(primitive_positive(-l));
  }
  VRep dual = dd::vrep_from_hrep(dim, gens);
  Cone c = assemble(dim, dual.rays, dual.lineality);
  for (const auto& r : rays) {
    if (!c.contains(r)) throw std::logic_error("vrep conversion bug");
  }
  for (const auto& l : lineality) {
    if (!c.contains(l) || !c.contains(-l)) {
      throw std::logic_error("vrep conversion bug");
    }
  }
  return c;
}

std::vector<QVector> Cone::hrep_normals_static() const {
  std::vector<QVector> normals = facets_;
  for (int i = 0; i < aff_.rows(); ++i) {
    normals.push_back(aff_.row(i));
    normals.push_back(-aff_.row(i));
  }
  return normals;
}

void Cone::finish() {
  cone_dim_ = dim_ - aff_.rows();
  QMatrix gens = lin_;
  if (gens.cols() == 0) gens = QMatrix(dim_);
  for (const auto& r : rays_) gens.append_row(r);
  if (rank(gens) != cone_dim_) throw std::logic_error("cone rank mismatch");
  for (const auto& r : rays_) {
    for (const auto& f : facets_) {
      if (dot(f, r).sign() < 0) throw std::logic_error("ray outside facet");
    }
    for (int i = 0; i < aff_.rows(); ++i) {
      if (!dot(aff_.row(i), r).is_zero()) {
        throw std::logic_error("ray outside span");
      }
    }
  }
  for (int j = 0; j < lin_.rows(); ++j) {
    for (const auto& f : facets_) {
      if (!dot(f, lin_.row(j)).is_zero()) {
        throw std::logic_error("lineality violates facet");
      }
    }
    for (int i = 0; i < aff_.rows(); ++i) {
      if (!dot(aff_.row(i), lin_.row(j)).is_zero()) {
        throw std::logic_error("lineality outside span");
      }
    }
  }

  struct Entry {
    QVector normal;
    bool is_facet;
    int facet_idx;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    entries.push_back({facets_[i], true, static_cast<int>(i)});
  }
  for (int i = 0; i < aff_.rows(); ++i) {
    entries.push_back({aff_.row(i), false, -1});
    entries.push_back({-aff_.row(i), false, -1});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) {
              return lex_less(a.normal, b.normal);
            });
  hrep_.clear();
  facet_hrep_pos_.assign(facets_.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    hrep_.push_back({entries[i].normal, entries[i].is_facet});
    if (entries[i].facet_idx >= 0) {
      facet_hrep_pos_[static_cast<std::size_t>(entries[i].facet_idx)] =
          static_cast<int>(i);
    }
  }
  lattice_box_ = std::make_shared<LatticeBox>();
  derived_box_ = std::make_shared<DerivedBox>();
}

std::vector<QVector> Cone::hrep_normals() const {
  std::vector<QVector> out;
  out.reserve(hrep_.size());
  for (const auto& h : hrep_) out.push_back(h.normal);
  return out;
}

bool Cone::contains(const QVector& x) const {
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (const auto& f : facets_) {
    if (dot(f, x).sign() < 0) return false;
  }
  return true;
}

bool Cone::relint_contains(const QVector& x) const {
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (const auto& f : facets_) {
    if (dot(f, x).sign() <= 0) return false;
  }
  return true;
}

bool Cone::dual_contains(const QVector& v) const {
  if (v.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < lin_.rows(); ++i) {
    if (!dot(lin_.row(i), v).is_zero()) return false;
  }
  for (const auto& r : rays_) {
    if (dot(r, v).sign() < 0) return false;
  }
  return true;
}

bool Cone::dual_relint_contains(const QVector& v) const {
  if (v.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < lin_.rows(); ++i) {
    if (!dot(lin_.row(i), v).is_zero()) return false;
  }
  for (const auto& r : rays_) {
    if (dot(r, v).sign() <= 0) return false;
  }
  return true;
}

void Cone::build_lattice() const {
  auto lat = std::make_unique<FaceLattice>();
  int nf = static_cast<int>(facets_.size());
  int nr = static_cast<int>(rays_.size());
  if (nf > kMaxLatticeGenerators || nr > kMaxLatticeGenerators) {
    throw UnsupportedInputError("cone too large for face enumeration");
  }
  std::vector<std::uint64_t> tight(static_cast<std::size_t>(nf), 0);
  for (int f = 0; f < nf; ++f) {
    for (int r = 0; r < nr; ++r) {
      if (dot(facets_[static_cast<std::size_t>(f)],
              rays_[static_cast<std::size_t>(r)])
              .is_zero()) {
        tight[static_cast<std::size_t>(f)] |= (std::uint64_t{1} << r);
      }
    }
  }
  std::uint64_t all_rays =
      nr == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nr) - 1);
  auto closure = [&](std::uint64_t facet_mask) {
    std::uint64_t rmask = all_rays;
    for (int f = 0; f < nf; ++f) {
      if (facet_mask & (std::uint64_t{1} << f)) {
        rmask &= tight[static_cast<std::size_t>(f)];
      }
    }
    std::uint64_t closed = 0;
    for (int f = 0; f < nf; ++f) {
      if ((tight[static_cast<std::size_t>(f)] & rmask) == rmask) {
        closed |= (std::uint64_t{1} << f);
      }
    }
    return closed;
  };

  std::map<std::uint64_t, std::uint64_t> seen;  // active mask -> ray mask
  std::vector<std::uint64_t> queue;
  auto visit = [&](std::uint64_t mask) {
    std::uint64_t closed = closure(mask);
    if (seen.count(closed)) return;
    std::uint64_t rmask = all_rays;
    for (int f = 0; f < nf; ++f) {
      if (closed & (std::uint64_t{1} << f)) {
        rmask &= tight[static_cast<std::size_t>(f)];
      }
    }
    seen.emplace(closed, rmask);
    queue.push_back(closed);
  };
  visit(0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint64_t s = queue[qi];
    for (int f = 0; f < nf; ++f) {
      if (!(s & (std::uint64_t{1} << f))) visit(s | (std::uint64_t{1} << f));
    }
  }

  for (const auto& [active, rmask] : seen) {
    Face face;
    face.active = active;
    QMatrix span = lin_;
    if (span.cols() == 0) span = QMatrix(dim_);
    for (int r = 0; r < nr; ++r) {
      if (rmask & (std::uint64_t{1} << r)) {
        face.ray_ids.push_back(r);
        span.append_row(rays_[static_cast<std::size_t>(r)]);
      }
    }
    face.span = row_space_basis(span);
    face.dim = face.span.rows();
    lat->faces_.push_back(std::move(face));
  }
  std::sort(lat->faces_.begin(), lat->faces_.end(),
            [](const Face& a, const Face& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.active < b.active;
            });
  for (int i = 0; i < lat->size(); ++i) {
    lat->by_active_.emplace(lat->faces_[static_cast<std::size_t>(i)].active, i);
    if (lat->faces_[static_cast<std::size_t>(i)].dim == lin_.rows()) {
      lat->minimal_ = i;
    }
    if (lat->faces_[static_cast<std::size_t>(i)].active == 0) lat->top_ = i;
  }
  lattice_box_->lattice = std::move(lat);
}

const FaceLattice& Cone::lattice() const {
  std::call_once(lattice_box_->once, [this] { build_lattice(); });
  return *lattice_box_->lattice;
}

const Face& Cone::face_at(int face_index) const {
  const FaceLattice& lat = lattice();
  if (face_index < 0 || face_index >= lat.size()) {
    throw UsageError("face index out of range");
  }
  return lat.face(face_index);
}

std::vector<int> Cone::face_active_hrep(int face_index) const {
  const Face& f = face_at(face_index);
  std::vector<int> out;
  for (std::size_t i = 0; i < hrep_.size(); ++i) {
    if (!hrep_[i].is_facet) out.push_back(static_cast<int>(i));
  }
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    if (f.active & (std::uint64_t{1} << fi)) {
      out.push_back(facet_hrep_pos_[fi]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Cone::face_contains(int face_index, const QVector& x) const {
  const Face& f = face_at(face_index);
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    int s = dot(facets_[fi], x).sign();
    if (f.active & (std::uint64_t{1} << fi)) {
      if (s != 0) return false;
    } else {
      if (s < 0) return false;
    }
  }
  return true;
}

bool Cone::face_relint_contains(int face_index, const QVector& x) const {
  const Face& f = face_at(face_index);
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    int s = dot(facets_[fi], x).sign();
    if (f.active & (std::uint64_t{1} << fi)) {
      if (s != 0) return false;
    } else {
      if (s <= 0) return false;
    }
  }
  return true;
}

bool Cone::angle_contains(int face_index, const QVector& x) const {
  const Face& f = face_at(face_index);
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    if (!(f.active & (std::uint64_t{1} << fi))) continue;
    if (dot(facets_[fi], x).sign() < 0) return false;
  }
  return true;
}

bool Cone::angle_relint_contains(int face_index, const QVector& x) const {
  const Face& f = face_at(face_index);
  if (x.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < aff_.rows(); ++i) {
    if (!dot(aff_.row(i), x).is_zero()) return false;
  }
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    if (!(f.active & (std::uint64_t{1} << fi))) continue;
    if (dot(facets_[fi], x).sign() <= 0) return false;
  }
  return true;
}

bool Cone::face_dual_contains(int face_index, const QVector& v) const {
  const Face& f = face_at(face_index);
  if (v.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < lin_.rows(); ++i) {
    if (!dot(lin_.row(i), v).is_zero()) return false;
  }
  for (int r : f.ray_ids) {
    if (dot(rays_[static_cast<std::size_t>(r)], v).sign() < 0) return false;
  }
  return true;
}

bool Cone::face_dual_relint_contains(int face_index, const QVector& v) const {
  const Face& f = face_at(face_index);
  if (v.dim() != dim_) throw UsageError("point dimension mismatch");
  for (int i = 0; i < lin_.rows(); ++i) {
    if (!dot(lin_.row(i), v).is_zero()) return false;
  }
  for (int r : f.ray_ids) {
    if (dot(rays_[static_cast<std::size_t>(r)], v).sign() <= 0) return false;
  }
  return true;
}

std::optional<int> Cone::smallest_face_containing(const QVector& x) const {
  if (!contains(x)) return std::nullopt;
  const FaceLattice& lat = lattice();
  std::uint64_t mask = 0;
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    if (dot(facets_[fi], x).is_zero()) mask |= (std::uint64_t{1} << fi);
  }
  int idx = lat.index_of_active(mask);
  if (idx < 0) throw std::logic_error("tight set is not a face");
  return idx;
}

void Cone::build_derived() const {
  const FaceLattice& lat = lattice();
  auto& box = *derived_box_;
  box.angle.reserve(static_cast<std::size_t>(lat.size()));
  box.dual.reserve(static_cast<std::size_t>(lat.size()));
  box.face.reserve(static_cast<std::size_t>(lat.size()));
  box.neg_face.reserve(static_cast<std::size_t>(lat.size()));
  for (int i = 0; i < lat.size(); ++i) {
    const Face& f = lat.face(i);
    std::vector<QVector> angle_normals;
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      if (f.active & (std::uint64_t{1} << fi)) {
        angle_normals.push_back(facets_[fi]);
      }
    }
    for (int j = 0; j < aff_.rows(); ++j) {
      angle_normals.push_back(aff_.row(j));
      angle_normals.push_back(-aff_.row(j));
    }
    box.angle.push_back(Cone::from_hrep(dim_, angle_normals));

    std::vector<QVector> dual_normals;
    std::vector<QVector> face_rays;
    std::vector<QVector> neg_rays;
    for (int r : f.ray_ids) {
      dual_normals.push_back(rays_[static_cast<std::size_t>(r)]);
      face_rays.push_back(rays_[static_cast<std::size_t>(r)]);
      neg_rays.push_back(-rays_[static_cast<std::size_t>(r)]);
    }
    std::vector<QVector> lin_rows;
    for (int j = 0; j < lin_.rows(); ++j) {
      dual_normals.push_back(lin_.row(j));
      dual_normals.push_back(-lin_.row(j));
      lin_rows.push_back(lin_.row(j));
    }
    box.dual.push_back(Cone::from_hrep(dim_, dual_normals));
    box.face.push_back(Cone::from_vrep(dim_, face_rays, lin_rows));
    box.neg_face.push_back(Cone::from_vrep(dim_, neg_rays, lin_rows));
  }
}

const Cone& Cone::angle_cone(int face_index) const {
  face_at(face_index);
  std::call_once(derived_box_->once, [this] { build_derived(); });
  return derived_box_->angle[static_cast<std::size_t>(face_index)];
}

const Cone& Cone::face_dual_cone(int face_index) const {
  face_at(face_index);
  std::call_once(derived_box_->once, [this] { build_derived(); });
  return derived_box_->dual[static_cast<std::size_t>(face_index)];
}

const Cone& Cone::face_cone(int face_index) const {
  face_at(face_index);
  std::call_once(derived_box_->once, [this] { build_derived(); });
  return derived_box_->face[static_cast<std::size_t>(face_index)];
}

const Cone& Cone::neg_face_cone(int face_index) const {
  face_at(face_index);
  std::call_once(derived_box_->once, [this] { build_derived(); });
  return derived_box_->neg_face[static_cast<std::size_t>(face_index)];
}

Cone Cone::dual() const {
  std::vector<QVector> normals = rays_;
  for (int i = 0; i < lin_.rows(); ++i) {
    normals.push_back(lin_.row(i));
    normals.push_back(-lin_.row(i));
  }
  return from_hrep(dim_, normals);
}

Cone Cone::negated() const {
  std::vector<QVector> neg;
  for (const auto& r : rays_) neg.push_back(-r);
  std::vector<QVector> lin_rows;
  for (int i = 0; i < lin_.rows(); ++i) lin_rows.push_back(lin_.row(i));
  return from_vrep(dim_, neg, lin_rows);
}

Cone Cone::pointed_part() const {
  return from_vrep(dim_, rays_, {});
}

bool operator==(const Cone& a, const Cone& b) {
  return a.dim_ == b.dim_ && a.facets_ == b.facets_ && a.aff_ == b.aff_ &&
         a.rays_ == b.rays_ && a.lin_ == b.lin_;
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw UsageError("Minkowski sum dimension mismatch");
  }
  std::vector<QVector> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<QVector> lin;
  for (int i = 0; i < a.lineality_basis().rows(); ++i) {
    lin.push_back(a.lineality_basis().row(i));
  }
  for (int i = 0; i < b.lineality_basis().rows(); ++i) {
    lin.push_back(b.lineality_basis().row(i));
  }
  return Cone::from_vrep(a.ambient_dim(), rays, lin);
}

CutResult cut(const Cone& c, const QVector& normal) {
  if (normal.dim() != c.ambient_dim()) {
    throw UsageError("cut normal dimension mismatch");
  }
  if (normal.is_zero()) throw UsageError("cut normal must be nonzero");
  std::vector<QVector> base = c.hrep_normals();
  std::vector<QVector> plus = base;
  plus.push_back(normal);
  std::vector<QVector> minus = base;
  minus.push_back(-normal);
  std::vector<QVector> slice = base;
  slice.push_back(normal);
  slice.push_back(-normal);
  return {Cone::from_hrep(c.ambient_dim(), plus),
          Cone::from_hrep(c.ambient_dim(), minus),
          Cone::from_hrep(c.ambient_dim(), slice)};
}

Rational face_parity_sum(const Cone& c) {
  const FaceLattice& lat = c.lattice();
  Rational sum;
  for (int i = 0; i < lat.size(); ++i) {
    int rel = c.dim() - lat.face(i).dim;
    sum += Rational(rel % 2 == 0 ? 1 : -1);
  }
  return sum;
}

QVector relint_point(const Cone& c) {
  QVector p(c.ambient_dim());
  for (const auto& r : c.rays()) p = p + r;
  return p;
}

QVector dual_relint_point(const Cone& c) {
  QVector p(c.ambient_dim());
  for (const auto& f : c.facet_normals()) p = p + f;
  return p;
}

}  // namespace coneval
