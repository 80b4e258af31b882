#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indpro/diagrams.hpp"
#include "indpro/io.hpp"
#include "indpro/pi_window.hpp"
#include "indpro/rng.hpp"
#include "indpro/tate.hpp"
#include "indpro/windows.hpp"

namespace indpro::harness {

// Line-oriented trial report. Identical seeds produce identical reports.
struct Report {
  std::vector<std::string> lines;
  int trials = 0;
  int failures = 0;
  // Failing instances, ready to be written out for replay.
  std::vector<std::pair<std::string, std::string>> failure_dumps;  // (name, document text)

  void pass(int trial);
  void fail(int trial, const std::string& detail);
  std::string summary() const;
  std::string text() const;
};

// Split short exact sequence conjugated by change of basis at every vertex.
SesTriple gen_random_ses(std::uint64_t seed, int max_dim, std::uint32_t p);

// Admissible cartesian square built from the split model and conjugated.
CommutingSquare gen_random_admissible_square(std::uint64_t seed, int max_dim, std::uint32_t p);

// Admissible square that may or may not be cartesian (reported alongside).
struct SquareSample {
  CommutingSquare square;
  bool built_cartesian;
};
SquareSample gen_random_admissible_square_mixed(std::uint64_t seed, int max_dim, std::uint32_t p);

struct Extension {
  PiWindow total;
  PiSes ses;
};

// Componentwise direct sum of two Kato windows with the presentation hidden
// by independent change of basis at every cell.
Extension gen_extension(const PiWindow& x, const PiWindow& z, std::uint64_t seed);

ThreeSquaresInstance gen_three_squares(std::uint64_t seed, int max_dim, std::uint32_t p);
Grid3x3 gen_grid_3x3(std::uint64_t seed, int max_dim, std::uint32_t p);

// Inductive window with arbitrary structure maps.
IndWindow gen_random_ind_window(Rng& rng, std::uint32_t p, int max_dim, int max_len);
ProWindow gen_random_pro_window(Rng& rng, std::uint32_t p, int max_dim, int max_len);
// Strict chain (injective maps) whose first space is zero-dimensional.
IndWindow gen_strict_chain(Rng& rng, std::uint32_t p, int max_dim, int len);

// Checks of the localizing-system axioms: the reindexing square commutes for
// random natural transformations, and the floor-inverse reindexing equalizes
// morphisms that agree after the denominator.
Report localizing_axioms_check(int trials, std::uint64_t seed, std::uint32_t p, int max_dim);

// Cartesian and cocartesian verdicts agree on random admissible squares.
Report cartesian_agreement_check(int trials, std::uint64_t seed, std::uint32_t p, int max_dim);

Report three_squares_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim);
Report middle_3x3_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim);

// Extensions of the two given Kato windows stay Kato.
Report extension_closure_check(const PiWindow& x, const PiWindow& z, int trials,
                               std::uint64_t seed);
// Driver that draws a fresh random Kato pair per trial.
Report extension_closure_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim,
                                int lo, int hi);

// Extensions of embedded inductive windows have invertible pro-direction
// maps below row zero and vanish below the diagonal seam.
Report ind_closure_check(const PiWindow& x, const PiWindow& z, int trials, std::uint64_t seed);
Report ind_closure_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim);

}  // namespace indpro::harness
