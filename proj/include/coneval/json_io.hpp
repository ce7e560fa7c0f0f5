#pragma once

#include "coneval/gamma.hpp"
#include "json.hpp"

namespace coneval {

// JSON conventions: every rational is a string "p" or "p/q" (or an exact JSON
// integer on input); floating-point numbers are rejected everywhere.

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);

QVector vector_from_json(const nlohmann::json& j, int expect_dim = -1);
nlohmann::json vector_to_json(const QVector& v);

// {"dim": n, "hrep": [[...]...], "vrep": {"rays": [...], "lineality": [...]}}
// Input accepts either representation (both must agree when both appear);
// output always carries both.
Cone cone_from_json(const nlohmann::json& j);
nlohmann::json cone_to_json(const Cone& c);

// Face lattice listing: dims, active facet sets, rays, and containments.
nlohmann::json faces_to_json(const Cone& c);

// {"normal": [...], "offset": "p/q", "rel": ">=" | ">" | "="}
AffineCondition condition_from_json(const nlohmann::json& j, int dim);
nlohmann::json condition_to_json(const AffineCondition& c);

nlohmann::json cell_to_json(const GeneralizedPolyhedron& p);
GeneralizedPolyhedron cell_from_json(const nlohmann::json& j, int dim);

// {"dim": n, "terms": [{"coeff": "p/q", "conditions": [...]}]}
nlohmann::json formal_sum_to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const nlohmann::json& j);

// {"dim": n, "cells": [{"conditions": [...], "witness": [...], "value": "p/q"}]}
// Reading back restores the cells; the wall list is not serialized.
nlohmann::json decomposition_to_json(const CellDecomposition& d);
CellDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace coneval
