#include "indpro/tate.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "indpro/rng.hpp"

namespace indpro {

namespace {

// t^a |-> t^(a-n), truncated to the exponent range of the target cell.
// Cells carry exponents -b .. -a-1 ordered deep to shallow for cell (a, b).
Mat exponent_shift(PrimeField k, int src_i, int src_j, int dst_i, int dst_j, int n) {
  Mat m(k, dst_j - dst_i, src_j - src_i);
  for (int c = 0; c < src_j - src_i; ++c) {
    int exp = -src_j + c;
    int target = exp - n;
    if (target >= -dst_j && target <= -dst_i - 1) {
      m.set(target + dst_j, c, 1);
    }
  }
  return m;
}

}  // namespace

PiWindow laurent_window(const LaurentSpec& spec) {
  PrimeField k{spec.p};
  if (spec.lo > spec.hi) throw std::invalid_argument("laurent_window: lo > hi");
  PiWindowBuilder b(k, spec.lo, spec.hi);
  for (int i = spec.lo; i <= spec.hi; ++i) {
    for (int j = i; j <= spec.hi; ++j) {
      b.set_dim(i, j, j - i);
      if (j + 1 <= spec.hi) {
        // Pad a zero coordinate at the deep end.
        Mat m(k, j - i + 1, j - i);
        for (int c = 0; c < j - i; ++c) m.set(c + 1, c, 1);
        b.set_mono(i, j, m);
      }
      if (i + 1 <= j) {
        // Drop the shallow coordinate.
        Mat e(k, j - i - 1, j - i);
        for (int c = 0; c < j - i - 1; ++c) e.set(c, c, 1);
        b.set_epi(i, j, e);
      }
    }
  }
  return b.build();
}

PiRoof shift_lattice(const LaurentSpec& spec, int n) {
  if (std::abs(n) > spec.hi - spec.lo) {
    throw std::invalid_argument("shift_lattice: window underflow, shift exceeds span");
  }
  PrimeField k{spec.p};
  PiWindow src = laurent_window(spec);
  PiWindow dst = laurent_window(LaurentSpec{spec.p, spec.lo + n, spec.hi + n});
  BicofinalMap phi = BicofinalMap::shift(n, spec.lo, spec.hi);
  int glo = spec.lo - 1 - std::max(0, -n);
  int ghi = spec.hi + 1 + std::max(0, -n);
  std::size_t width = std::size_t(ghi - glo + 1);
  std::vector<Mat> comps(width * width, Mat(k, 0, 0));
  auto cl = [](int v, int a, int b) { return std::max(a, std::min(v, b)); };
  for (int i = glo; i <= ghi; ++i) {
    for (int j = i; j <= ghi; ++j) {
      int si = cl(i, spec.lo, spec.hi), sj = cl(j, spec.lo, spec.hi);
      int di = cl(i + n, spec.lo + n, spec.hi + n), dj = cl(j + n, spec.lo + n, spec.hi + n);
      comps[std::size_t(i - glo) * width + std::size_t(j - glo)] =
          exponent_shift(k, si, sj, di, dj, n);
    }
  }
  return PiRoof(std::move(src), std::move(dst), std::move(phi), glo, ghi, std::move(comps));
}

PiWindow random_kato_window(std::uint32_t p, int lo, int hi, int max_dim, std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("random_kato_window: lo > hi");
  if (max_dim < 1) throw std::invalid_argument("random_kato_window: max_dim < 1");
  PrimeField k{p};
  Rng rng(seed ^ 0x7c0ffee1234567ULL);
  rng.next();

  int span = hi - lo;
  int laurent_span = std::min(span, std::max(1, max_dim / 2));
  PiWindow base =
      restrict_or_extend(laurent_window(LaurentSpec{p, lo, lo + laurent_span}), lo, hi);

  // A strict chain embedded and slid into place.
  int chain_cap = std::max(1, max_dim - laurent_span);
  int chain_len = rng.range(1, std::max(1, std::min(3, span + 1)));
  std::vector<int> dims(std::size_t(chain_len + 1));
  dims[0] = rng.range(0, 1);
  for (int t = 1; t <= chain_len; ++t) {
    dims[std::size_t(t)] = std::min(chain_cap, dims[std::size_t(t - 1)] + rng.range(0, 1));
  }
  std::vector<Mat> maps;
  for (int t = 0; t < chain_len; ++t) {
    Mat incl(k, dims[std::size_t(t + 1)], dims[std::size_t(t)]);
    for (int c = 0; c < dims[std::size_t(t)]; ++c) incl.set(c, c, 1);
    maps.push_back(random_invertible(rng, k, dims[std::size_t(t + 1)]) * incl *
                   random_invertible(rng, k, dims[std::size_t(t)]));
  }
  PiWindow chain = restrict_or_extend(embed_ind_window(IndWindow(k, dims, maps)), lo, hi);

  PiWindow sum = direct_sum(base, chain);
  // Per-cell change of basis, drawn deterministically.
  std::vector<std::vector<Mat>> cell(std::size_t(span + 1),
                                     std::vector<Mat>(std::size_t(span + 1), Mat(k, 0, 0)));
  for (int i = lo; i <= hi; ++i) {
    for (int j = i; j <= hi; ++j) {
      cell[std::size_t(i - lo)][std::size_t(j - lo)] =
          random_invertible(rng, k, sum.dim(i, j));
    }
  }
  return conjugate(sum, [&](int i, int j) { return cell[std::size_t(i - lo)][std::size_t(j - lo)]; });
}

}  // namespace indpro
