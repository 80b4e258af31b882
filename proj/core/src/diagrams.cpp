#include "indpro/diagrams.hpp"

#include <stdexcept>
#include <string>

namespace indpro {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw std::invalid_argument("three_squares: " + what);
}

void require_eq(const Mat& a, const Mat& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("three_squares: cube face ") + what +
                                          " does not commute");
}

}  // namespace

void validate_three_squares(const ThreeSquaresInstance& inst) {
  const CommutingSquare& p = inst.primed;
  const CommutingSquare& m = inst.middle;
  const CommutingSquare& d = inst.double_primed;
  if (!square_commutes(p)) violated("primed square does not commute");
  if (!square_commutes(m)) violated("middle square does not commute");
  if (!square_commutes(d)) violated("double-primed square does not commute");
  if (!square_admissible(p)) violated("primed square is not admissible");
  if (!square_admissible(m)) violated("middle square is not admissible");
  if (!square_admissible(d)) violated("double-primed square is not admissible");
  if (!is_ses(inst.ses_x)) violated("sequence at X is not short exact");
  if (!is_ses(inst.ses_y)) violated("sequence at Y is not short exact");
  if (!is_ses(inst.ses_t)) violated("sequence at T is not short exact");
  if (!is_ses(inst.ses_z)) violated("sequence at Z is not short exact");
  // Mono legs.
  require_eq(m.a_to_b * inst.ses_x.mono, inst.ses_y.mono * p.a_to_b, "X'->Y");
  require_eq(m.a_to_d * inst.ses_x.mono, inst.ses_t.mono * p.a_to_d, "X'->T");
  require_eq(m.b_to_c * inst.ses_y.mono, inst.ses_z.mono * p.b_to_c, "Y'->Z");
  require_eq(m.d_to_c * inst.ses_t.mono, inst.ses_z.mono * p.d_to_c, "T'->Z");
  // Epi legs.
  require_eq(d.a_to_b * inst.ses_x.epi, inst.ses_y.epi * m.a_to_b, "X->Y''");
  require_eq(d.a_to_d * inst.ses_x.epi, inst.ses_t.epi * m.a_to_d, "X->T''");
  require_eq(d.b_to_c * inst.ses_y.epi, inst.ses_z.epi * m.b_to_c, "Y->Z''");
  require_eq(d.d_to_c * inst.ses_t.epi, inst.ses_z.epi * m.d_to_c, "T->Z''");
  if (!is_cartesian(p)) violated("primed square is not cartesian");
  if (!is_cartesian(d)) violated("double-primed square is not cartesian");
}

bool three_squares_check(const ThreeSquaresInstance& inst) {
  validate_three_squares(inst);
  return is_cartesian(inst.middle);
}

void validate_grid_3x3(const Grid3x3& g) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("grid_3x3: " + what);
  };
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (g.col_maps[std::size_t(r)][std::size_t(c + 1)] * g.row_maps[std::size_t(r)][std::size_t(c)] !=
          g.row_maps[std::size_t(r + 1)][std::size_t(c)] * g.col_maps[std::size_t(r)][std::size_t(c)]) {
        bad("square at row " + std::to_string(r) + ", column " + std::to_string(c) +
            " does not commute");
      }
    }
  }
  for (int r : {0, 2}) {
    if (!is_ses(SesTriple{g.row_maps[std::size_t(r)][0], g.row_maps[std::size_t(r)][1]})) {
      bad("row " + std::to_string(r) + " is not short exact");
    }
  }
  for (int c = 0; c < 3; ++c) {
    if (!is_ses(SesTriple{g.col_maps[0][std::size_t(c)], g.col_maps[1][std::size_t(c)]})) {
      bad("column " + std::to_string(c) + " is not short exact");
    }
  }
}

bool middle_3x3_check(const Grid3x3& g) {
  validate_grid_3x3(g);
  return is_ses(SesTriple{g.row_maps[1][0], g.row_maps[1][1]});
}

}  // namespace indpro
