#pragma once

#include <vector>

#include "indpro/linalg.hpp"
#include "indpro/rng.hpp"

namespace testsup {

using namespace indpro;

// Every column vector of F^n, for brute-force oracles. Keep n small.
inline std::vector<Mat> all_vectors(PrimeField k, int n) {
  std::vector<Mat> out;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= k.modulus();
  for (long long code = 0; code < total; ++code) {
    Mat v(k, n, 1);
    long long c = code;
    for (int i = 0; i < n; ++i) {
      v.set(i, 0, std::uint32_t(c % k.modulus()));
      c /= k.modulus();
    }
    out.push_back(v);
  }
  return out;
}

inline Subspace span_of(PrimeField k, int ambient, const std::vector<Mat>& vecs) {
  Mat joined(k, ambient, int(vecs.size()));
  for (int c = 0; c < int(vecs.size()); ++c) {
    for (int r = 0; r < ambient; ++r) joined.set(r, c, vecs[std::size_t(c)].at(r, 0));
  }
  return Subspace{ambient, column_echelon_basis(joined)};
}

inline Subspace brute_kernel(const Mat& f) {
  std::vector<Mat> hits;
  for (const Mat& v : all_vectors(f.field(), f.cols())) {
    if ((f * v).is_zero()) hits.push_back(v);
  }
  return span_of(f.field(), f.cols(), hits);
}

inline Subspace brute_image(const Mat& f) {
  std::vector<Mat> hits;
  for (const Mat& v : all_vectors(f.field(), f.cols())) hits.push_back(f * v);
  return span_of(f.field(), f.rows(), hits);
}

inline Subspace brute_intersection(const Subspace& a, const Subspace& b) {
  std::vector<Mat> hits;
  for (const Mat& v : all_vectors(a.basis.field(), a.ambient)) {
    if (subspace_contains(a, v) && subspace_contains(b, v)) hits.push_back(v);
  }
  return span_of(a.basis.field(), a.ambient, hits);
}

inline Mat unit_vector(PrimeField k, int n, int i) {
  Mat v(k, n, 1);
  v.set(i, 0, 1);
  return v;
}

}  // namespace testsup
