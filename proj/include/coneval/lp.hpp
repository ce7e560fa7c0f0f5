#pragma once

#include <optional>

#include "coneval/indicator.hpp"

namespace coneval {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  QVector point;
};

// Maximize <objective, x> over {x : <normal_i, x> rel_i offset_i} with free
// variables, by exact two-phase simplex with Bland's rule.  Strict rows are
// treated as their closures; callers encode strictness via slack variables.
LpResult solve_lp(int nvars, const std::vector<AffineCondition>& rows,
                  const QVector& objective);

// Point of a relatively open cell, found by maximizing the minimum slack
// (capped at 1) over the strict conditions.  nullopt when the cell is empty.
std::optional<QVector> relint_witness(const GeneralizedPolyhedron& p);

// Feasible point maximizing the minimum slack (capped at 1) over all
// inequality conditions; a point as deep inside p as the cap allows.
// nullopt when p is empty.
std::optional<QVector> interior_witness(const GeneralizedPolyhedron& p);

}  // namespace coneval
