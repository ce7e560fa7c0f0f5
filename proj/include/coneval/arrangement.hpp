#pragma once

#include <cstdint>
#include <vector>

#include "coneval/indicator.hpp"

namespace coneval {

// Hyperplane <normal, x> = offset, stored with a canonical sign so that
// opposite descriptions coincide.
struct Wall {
  QVector normal;
  Rational offset;
  friend bool operator==(const Wall& a, const Wall& b) {
    return a.offset == b.offset && a.normal == b.normal;
  }
};

Wall make_wall(const QVector& normal, const Rational& offset);
std::vector<Wall> dedupe_walls(std::vector<Wall> walls);

// One relatively open face of a hyperplane arrangement: the sign of every
// wall plus a condition list cutting it out exactly.
struct ArrangementFace {
  std::vector<int> sign;  // -1, 0, +1 per wall
  GeneralizedPolyhedron cell;
};

// All nonempty relatively open faces, built by inserting walls one at a time
// and splitting each face into its strict sides and slice.  Deterministic:
// output order depends only on the wall list.
std::vector<ArrangementFace> enumerate_arrangement_faces(
    int dim, const std::vector<Wall>& walls);

// Vertices of the arrangement: unique solutions of dim-subsets of walls.
// Skipped (empty result) when the subset count exceeds `budget`.
std::vector<QVector> arrangement_vertices(int dim,
                                          const std::vector<Wall>& walls,
                                          std::size_t budget);

}  // namespace coneval
