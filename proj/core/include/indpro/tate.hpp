#pragma once

#include <cstdint>

#include "indpro/pi_window.hpp"

namespace indpro {

// Lattice window of a Laurent-series space: cell (i,j) holds the span of
// t^-j, ..., t^-(i+1), ordered deep to shallow.
struct LaurentSpec {
  std::uint32_t p;
  int lo;
  int hi;
};

PiWindow laurent_window(const LaurentSpec& spec);

// Multiplication by t^-n as a roof from laurent(lo,hi) onto the translated
// window laurent(lo+n, hi+n); invertible, with the inverse given by -n.
PiRoof shift_lattice(const LaurentSpec& spec, int n);

// Deterministic Kato window: a conjugated direct sum of a Laurent window and
// an embedded strict chain. Always passes is_kato.
PiWindow random_kato_window(std::uint32_t p, int lo, int hi, int max_dim, std::uint64_t seed);

}  // namespace indpro
