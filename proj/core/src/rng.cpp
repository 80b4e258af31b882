#include "indpro/rng.hpp"

#include "indpro/linalg.hpp"

namespace indpro {

Mat random_mat(Rng& rng, PrimeField field, int rows, int cols) {
  Mat m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, std::uint32_t(rng.below(field.modulus())));
  return m;
}

Mat random_invertible(Rng& rng, PrimeField field, int n) {
  while (true) {
    Mat m = random_mat(rng, field, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace indpro
