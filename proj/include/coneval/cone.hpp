#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "coneval/linalg.hpp"

namespace coneval {

// Constraint <normal, x> >= 0 through the origin.
struct Halfspace {
  QVector normal;
  bool is_facet = true;  // false for the paired constraints cutting the span
};

// One face of a cone, identified by the set of facet constraints active on it.
struct Face {
  std::uint64_t active = 0;   // bitmask over the cone's facet list
  std::vector<int> ray_ids;   // canonical rays lying on the face, ascending
  QMatrix span;               // canonical basis of the linear span of the face
  int dim = 0;
  // (-1)^dim
  int parity() const { return dim % 2 == 0 ? 1 : -1; }
};

class FaceLattice {
 public:
  int size() const { return static_cast<int>(faces_.size()); }
  const Face& face(int i) const { return faces_[static_cast<std::size_t>(i)]; }
  int minimal_index() const { return minimal_; }
  int top_index() const { return top_; }
  // Whether face i is contained in face j.
  bool subset(int i, int j) const;
  int index_of_active(std::uint64_t mask) const;

 private:
  friend class Cone;
  std::vector<Face> faces_;  // sorted by (dim, active mask)
  std::map<std::uint64_t, int> by_active_;
  int minimal_ = 0;
  int top_ = 0;
};

// Rays plus a lineality basis; the raw output of cone conversion.
struct VRep {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

namespace dd {
// Double description: extreme rays and lineality of
// {x : <n, x> >= 0 for all n in normals}.
VRep vrep_from_hrep(int dim, const std::vector<QVector>& normals);
}  // namespace dd

// Polyhedral cone in canonical form.  Immutable after construction; equality
// of canonical data is equality of point sets.
class Cone {
 public:
  static Cone from_hrep(int dim, const std::vector<QVector>& normals);
  static Cone from_vrep(int dim, const std::vector<QVector>& rays,
                        const std::vector<QVector>& lineality);
  static Cone whole_space(int dim) { return from_hrep(dim, {}); }
  static Cone zero_cone(int dim) { return from_vrep(dim, {}, {}); }

  int ambient_dim() const { return dim_; }
  int dim() const { return cone_dim_; }  // dimension of the cone itself
  // (-1)^dim()
  int parity() const { return cone_dim_ % 2 == 0 ? 1 : -1; }

  // Canonical facet normals, primitive and lex-sorted.
  const std::vector<QVector>& facet_normals() const { return facets_; }
  // Canonical basis of the orthogonal complement of the cone's span; each row
  // contributes a pair of opposite constraints.
  const QMatrix& span_complement_basis() const { return aff_; }
  // Canonical extreme rays modulo lineality, primitive and lex-sorted.
  const std::vector<QVector>& rays() const { return rays_; }
  // Canonical basis of the lineality space (the minimal face).
  const QMatrix& lineality_basis() const { return lin_; }
  bool is_pointed() const { return lin_.rows() == 0; }
  bool is_subspace() const { return rays_.empty(); }
  bool is_full_dim() const { return cone_dim_ == dim_; }

  // Full constraint list: facets plus both orientations of each span cut,
  // lex-sorted.
  const std::vector<Halfspace>& hrep() const { return hrep_; }
  // All constraint normals in hrep() order.
  std::vector<QVector> hrep_normals() const;

  bool contains(const QVector& x) const;
  bool relint_contains(const QVector& x) const;
  // Membership in the dual cone and its relative interior, read off the
  // canonical generators without constructing the dual.
  bool dual_contains(const QVector& v) const;
  bool dual_relint_contains(const QVector& v) const;

  const FaceLattice& lattice() const;
  int face_count() const { return lattice().size(); }
  int minimal_face_index() const { return lattice().minimal_index(); }
  int top_face_index() const { return lattice().top_index(); }
  // hrep() indices active on the face (facets active on it plus all span
  // cuts).
  std::vector<int> face_active_hrep(int face_index) const;

  // Membership tests driven by the face lattice; no cone construction.
  bool face_contains(int face_index, const QVector& x) const;
  bool face_relint_contains(int face_index, const QVector& x) const;
  bool angle_contains(int face_index, const QVector& x) const;
  bool angle_relint_contains(int face_index, const QVector& x) const;
  bool face_dual_contains(int face_index, const QVector& v) const;
  bool face_dual_relint_contains(int face_index, const QVector& v) const;

  // Smallest face containing x, as a lattice index.
  std::optional<int> smallest_face_containing(const QVector& x) const;

  // Derived cones, constructed on first use and cached.
  const Cone& angle_cone(int face_index) const;     // cone of C seen from F
  const Cone& face_dual_cone(int face_index) const; // dual cone of the face
  const Cone& face_cone(int face_index) const;      // the face itself
  const Cone& neg_face_cone(int face_index) const;  // the negated face

  Cone dual() const;
  Cone negated() const;
  Cone pointed_part() const;

  friend bool operator==(const Cone& a, const Cone& b);
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

 private:
  Cone() = default;
  static Cone assemble(int dim, const std::vector<QVector>& dual_rays,
                       const std::vector<QVector>& dual_lineality);
  std::vector<QVector> hrep_normals_static() const;
  void finish();
  void build_lattice() const;
  void build_derived() const;
  const Face& face_at(int face_index) const;

  int dim_ = 0;
  int cone_dim_ = 0;
  std::vector<QVector> facets_;
  QMatrix aff_;
  std::vector<QVector> rays_;
  QMatrix lin_;
  std::vector<Halfspace> hrep_;
  std::vector<int> facet_hrep_pos_;  // facet index -> hrep() index

  struct LatticeBox {
    std::once_flag once;
    std::unique_ptr<FaceLattice> lattice;
  };
  struct DerivedBox {
    std::once_flag once;
    std::vector<Cone> angle, dual, face, neg_face;
  };
  std::shared_ptr<LatticeBox> lattice_box_;
  std::shared_ptr<DerivedBox> derived_box_;
};

Cone minkowski_sum(const Cone& a, const Cone& b);

struct CutResult {
  Cone plus;   // C with <h, x> >= 0 added
  Cone minus;  // C with <h, x> <= 0 added
  Cone slice;  // C with <h, x> = 0 added
};
CutResult cut(const Cone& c, const QVector& normal);

// Sum over all faces F of (-1)^(dim C - dim F).  Equals 1 exactly when the
// cone is a subspace.
Rational face_parity_sum(const Cone& c);

// Sum of the canonical rays: a rational point in the relative interior.
QVector relint_point(const Cone& c);
// Sum of the canonical facet normals: a rational point in the relative
// interior of the dual cone.
QVector dual_relint_point(const Cone& c);

}  // namespace coneval
