#pragma once

#include <array>

#include "indpro/linalg.hpp"

namespace indpro {

// Three admissible squares linked by short exact sequences at each vertex,
// forming a commuting cube. Vertex letters follow the square layout
//   X --m1--> Y
//   |         |
//   e2        e1
//   v         v
//   T --m2--> Z
// with the primed square mapping in by monos (f legs) and the double-primed
// square receiving the epis (g legs).
struct ThreeSquaresInstance {
  CommutingSquare primed;         // X', Y', T', Z'
  CommutingSquare middle;         // X, Y, T, Z
  CommutingSquare double_primed;  // X'', Y'', T'', Z''
  SesTriple ses_x;                // X' -> X -> X''
  SesTriple ses_y;
  SesTriple ses_t;
  SesTriple ses_z;
  bool operator==(const ThreeSquaresInstance&) const = default;
};

// Throws std::invalid_argument describing the first violated hypothesis:
// shapes, cube commutation, the four vertex sequences being short exact,
// admissibility of the squares, and cartesianity of the outer two.
void validate_three_squares(const ThreeSquaresInstance& inst);

// Validates, then decides whether the middle square is cartesian (the
// conclusion the instance is expected to satisfy).
bool three_squares_check(const ThreeSquaresInstance& inst);

// Commutative 3x3 grid: rows indexed top to bottom, columns left to right.
// row_maps[r][0] : A[r][0] -> A[r][1], row_maps[r][1] : A[r][1] -> A[r][2];
// col_maps[0][c] : A[0][c] -> A[1][c], col_maps[1][c] : A[1][c] -> A[2][c].
struct Grid3x3 {
  std::array<std::array<Mat, 2>, 3> row_maps;
  std::array<std::array<Mat, 3>, 2> col_maps;
};

// Throws on the first violated hypothesis: commutation, first and third row
// short exact, all columns short exact.
void validate_grid_3x3(const Grid3x3& g);

// Validates, then decides exactness of the middle row.
bool middle_3x3_check(const Grid3x3& g);

}  // namespace indpro
