#pragma once

#include <cstdint>

#include "indpro/mat.hpp"

namespace indpro {

// splitmix64; fixed across platforms so seeded reports are byte-identical
// everywhere, which the standard distributions do not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n); n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + int(below(std::uint64_t(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Independent stream for a numbered trial under a master seed.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
  mix.next();
  return mix;
}

Mat random_mat(Rng& rng, PrimeField field, int rows, int cols);
Mat random_invertible(Rng& rng, PrimeField field, int n);

}  // namespace indpro
