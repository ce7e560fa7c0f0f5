#include "coneval/json_io.hpp"

#include <string>

#include "coneval/errors.hpp"

namespace coneval {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int dim_from_json(const json& j) {
  const json& d = require_field(j, "dim");
  if (!d.is_number_integer()) throw UsageError("\"dim\" must be an integer");
  long long dim = d.get<long long>();
  if (dim < 1) throw UsageError("\"dim\" must be positive");
  if (dim > 16) throw UnsupportedInputError("ambient dimension too large");
  return static_cast<int>(dim);
}

std::vector<QVector> vector_list_from_json(const json& j, int dim,
                                           const char* what) {
  if (!j.is_array()) {
    throw UsageError(std::string("\"") + what + "\" must be an array");
  }
  std::vector<QVector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e, dim));
  return out;
}

json vector_list_to_json(const std::vector<QVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    return Rational::parse(std::to_string(j.get<long long>()));
  }
  if (j.is_number_float()) {
    throw UsageError("floating-point numbers are not accepted; use \"p/q\"");
  }
  throw UsageError("expected a rational as \"p/q\" string or integer");
}

json rational_to_json(const Rational& r) { return json(r.str()); }

QVector vector_from_json(const json& j, int expect_dim) {
  if (!j.is_array()) throw UsageError("expected an array of rationals");
  if (expect_dim >= 0 && static_cast<int>(j.size()) != expect_dim) {
    throw UsageError("vector has wrong dimension");
  }
  QVector v(static_cast<int>(j.size()));
  int i = 0;
  for (const auto& e : j) v[i++] = rational_from_json(e);
  return v;
}

json vector_to_json(const QVector& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

Cone cone_from_json(const json& j) {
  int dim = dim_from_json(j);
  bool has_h = j.contains("hrep");
  bool has_v = j.contains("vrep");
  if (!has_h && !has_v) {
    throw UsageError("cone needs \"hrep\" or \"vrep\"");
  }
  std::optional<Cone> from_h;
  if (has_h) {
    from_h = Cone::from_hrep(dim,
                             vector_list_from_json(j.at("hrep"), dim, "hrep"));
  }
  std::optional<Cone> from_v;
  if (has_v) {
    const json& v = j.at("vrep");
    if (!v.is_object()) throw UsageError("\"vrep\" must be an object");
    std::vector<QVector> rays, lineality;
    if (v.contains("rays")) {
      rays = vector_list_from_json(v.at("rays"), dim, "rays");
    }
    if (v.contains("lineality")) {
      lineality = vector_list_from_json(v.at("lineality"), dim, "lineality");
    }
    from_v = Cone::from_vrep(dim, rays, lineality);
  }
  if (from_h && from_v && !(*from_h == *from_v)) {
    throw UsageError("\"hrep\" and \"vrep\" describe different cones");
  }
  return from_h ? *from_h : *from_v;
}

json cone_to_json(const Cone& c) {
  json out;
  out["dim"] = c.ambient_dim();
  out["hrep"] = vector_list_to_json(c.hrep_normals());
  json vrep;
  vrep["rays"] = vector_list_to_json(c.rays());
  std::vector<QVector> lin;
  for (int i = 0; i < c.lineality_basis().rows(); ++i) {
    lin.push_back(c.lineality_basis().row(i));
  }
  vrep["lineality"] = vector_list_to_json(lin);
  out["vrep"] = vrep;
  return out;
}

json faces_to_json(const Cone& c) {
  const FaceLattice& lat = c.lattice();
  json out;
  out["dim"] = c.ambient_dim();
  out["cone_dim"] = c.dim();
  out["face_count"] = lat.size();
  out["minimal_face"] = lat.minimal_index();
  out["top_face"] = lat.top_index();
  json faces = json::array();
  for (int i = 0; i < lat.size(); ++i) {
    const Face& f = lat.face(i);
    json jf;
    jf["index"] = i;
    jf["dim"] = f.dim;
    json active = json::array();
    for (std::size_t k = 0; k < c.facet_normals().size(); ++k) {
      if (f.active & (std::uint64_t{1} << k)) active.push_back(k);
    }
    jf["active_facets"] = active;
    json rays = json::array();
    for (int r : f.ray_ids) rays.push_back(r);
    jf["ray_ids"] = rays;
    json subfaces = json::array();
    for (int k = 0; k < lat.size(); ++k) {
      if (k != i && lat.subset(k, i)) subfaces.push_back(k);
    }
    jf["subfaces"] = subfaces;
    faces.push_back(jf);
  }
  out["faces"] = faces;
  return out;
}

AffineCondition condition_from_json(const json& j, int dim) {
  AffineCondition c;
  c.normal = vector_from_json(require_field(j, "normal"), dim);
  c.offset = rational_from_json(require_field(j, "offset"));
  const json& rel = require_field(j, "rel");
  if (!rel.is_string()) throw UsageError("\"rel\" must be a string");
  std::string s = rel.get<std::string>();
  if (s == ">=") {
    c.rel = Rel::Ge;
  } else if (s == ">") {
    c.rel = Rel::Gt;
  } else if (s == "=") {
    c.rel = Rel::Eq;
  } else {
    throw UsageError("\"rel\" must be one of \">=\", \">\", \"=\"");
  }
  return c;
}

json condition_to_json(const AffineCondition& c) {
  json out;
  out["normal"] = vector_to_json(c.normal);
  out["offset"] = rational_to_json(c.offset);
  out["rel"] = c.rel == Rel::Ge ? ">=" : (c.rel == Rel::Gt ? ">" : "=");
  return out;
}

json cell_to_json(const GeneralizedPolyhedron& p) {
  json out = json::array();
  for (const auto& c : p.conditions()) out.push_back(condition_to_json(c));
  return out;
}

GeneralizedPolyhedron cell_from_json(const json& j, int dim) {
  if (!j.is_array()) throw UsageError("cell conditions must be an array");
  GeneralizedPolyhedron p(dim);
  for (const auto& e : j) p.add(condition_from_json(e, dim));
  return p;
}

json formal_sum_to_json(const FormalSum& s) {
  json out;
  out["dim"] = s.dim();
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json jt;
    jt["coeff"] = rational_to_json(t.coeff);
    jt["conditions"] = cell_to_json(t.cell);
    terms.push_back(jt);
  }
  out["terms"] = terms;
  return out;
}

FormalSum formal_sum_from_json(const json& j) {
  int dim = dim_from_json(j);
  FormalSum s(dim);
  const json& terms = require_field(j, "terms");
  if (!terms.is_array()) throw UsageError("\"terms\" must be an array");
  for (const auto& t : terms) {
    Rational coeff = rational_from_json(require_field(t, "coeff"));
    s.append(coeff, cell_from_json(require_field(t, "conditions"), dim));
  }
  return s;
}

json decomposition_to_json(const CellDecomposition& d) {
  json out;
  out["dim"] = d.dim;
  json cells = json::array();
  for (const auto& c : d.cells) {
    json jc;
    jc["conditions"] = cell_to_json(c.cell);
    jc["witness"] = vector_to_json(c.witness);
    jc["value"] = rational_to_json(c.value);
    cells.push_back(jc);
  }
  out["cells"] = cells;
  return out;
}

CellDecomposition decomposition_from_json(const json& j) {
  CellDecomposition d;
  d.dim = dim_from_json(j);
  const json& cells = require_field(j, "cells");
  if (!cells.is_array()) throw UsageError("\"cells\" must be an array");
  for (const auto& jc : cells) {
    RegionCell c{cell_from_json(require_field(jc, "conditions"), d.dim),
                 vector_from_json(require_field(jc, "witness"), d.dim),
                 rational_from_json(require_field(jc, "value"))};
    d.cells.push_back(std::move(c));
  }
  return d;
}

}  // namespace coneval
