#include "indpro/harness.hpp"

#include <algorithm>
#include <stdexcept>

namespace indpro::harness {

void Report::pass(int trial) {
  lines.push_back("trial=" + std::to_string(trial) + " ok");
  ++trials;
}

void Report::fail(int trial, const std::string& detail) {
  lines.push_back("trial=" + std::to_string(trial) + " FAIL " + detail);
  ++trials;
  ++failures;
}

std::string Report::summary() const {
  return "trials=" + std::to_string(trials) + " failures=" + std::to_string(failures);
}

std::string Report::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  out += summary() + "\n";
  return out;
}

namespace {

void require_dim_cap(int max_dim, const char* where) {
  if (max_dim < 1 || max_dim > 8) {
    throw std::invalid_argument(std::string(where) + ": max_dim must be in [1, 8]");
  }
}

// Split mono/epi pair a' >-> a' (+) a'' ->> a''.
Mat split_mono(PrimeField k, int a1, int a2) {
  Mat m(k, a1 + a2, a1);
  for (int i = 0; i < a1; ++i) m.set(i, i, 1);
  return m;
}

Mat split_epi(PrimeField k, int a1, int a2) {
  Mat m(k, a2, a1 + a2);
  for (int i = 0; i < a2; ++i) m.set(i, a1 + i, 1);
  return m;
}

SesTriple conjugated_split_ses(Rng& rng, PrimeField k, int a1, int a2) {
  Mat ga = random_invertible(rng, k, a1 + a2);
  Mat g1 = random_invertible(rng, k, a1);
  Mat g2 = random_invertible(rng, k, a2);
  return SesTriple{ga * split_mono(k, a1, a2) * inverse(g1),
                   g2 * split_epi(k, a1, a2) * inverse(ga)};
}

// Split admissible square on blocks (p, q, r):
//   a = P+Q  -->  b = P+Q+R
//   |             |
//   v             v
//   d = P    -->  c = P+R
struct SplitSquareDims {
  int p, q, r;
};

CommutingSquare split_square(PrimeField k, SplitSquareDims s) {
  Mat a_to_b(k, s.p + s.q + s.r, s.p + s.q);
  for (int i = 0; i < s.p + s.q; ++i) a_to_b.set(i, i, 1);
  Mat a_to_d(k, s.p, s.p + s.q);
  for (int i = 0; i < s.p; ++i) a_to_d.set(i, i, 1);
  Mat b_to_c(k, s.p + s.r, s.p + s.q + s.r);
  for (int i = 0; i < s.p; ++i) b_to_c.set(i, i, 1);
  for (int i = 0; i < s.r; ++i) b_to_c.set(s.p + i, s.p + s.q + i, 1);
  Mat d_to_c(k, s.p + s.r, s.p);
  for (int i = 0; i < s.p; ++i) d_to_c.set(i, i, 1);
  return CommutingSquare{a_to_b, a_to_d, b_to_c, d_to_c};
}

CommutingSquare conjugate_square(Rng& rng, PrimeField k, const CommutingSquare& s) {
  Mat ga = random_invertible(rng, k, s.a_to_b.cols());
  Mat gb = random_invertible(rng, k, s.a_to_b.rows());
  Mat gd = random_invertible(rng, k, s.a_to_d.rows());
  Mat gc = random_invertible(rng, k, s.b_to_c.rows());
  return CommutingSquare{gb * s.a_to_b * inverse(ga), gd * s.a_to_d * inverse(ga),
                         gc * s.b_to_c * inverse(gb), gc * s.d_to_c * inverse(gd)};
}

}  // namespace

SesTriple gen_random_ses(std::uint64_t seed, int max_dim, std::uint32_t p) {
  require_dim_cap(max_dim, "gen_random_ses");
  PrimeField k{p};
  Rng rng(seed);
  rng.next();
  int a1 = rng.range(0, max_dim / 2);
  int a2 = rng.range(0, max_dim - a1);
  return conjugated_split_ses(rng, k, a1, a2);
}

CommutingSquare gen_random_admissible_square(std::uint64_t seed, int max_dim, std::uint32_t p) {
  require_dim_cap(max_dim, "gen_random_admissible_square");
  PrimeField k{p};
  Rng rng(seed ^ 0x5afe5eedULL);
  rng.next();
  int dp = rng.range(0, max_dim / 2);
  int dq = rng.range(0, (max_dim - dp) / 2);
  int dr = rng.range(0, max_dim - dp - dq);
  return conjugate_square(rng, k, split_square(k, SplitSquareDims{dp, dq, dr}));
}

SquareSample gen_random_admissible_square_mixed(std::uint64_t seed, int max_dim,
                                                std::uint32_t p) {
  require_dim_cap(max_dim, "gen_random_admissible_square_mixed");
  PrimeField k{p};
  Rng rng(seed ^ 0x31c0de5ULL);
  rng.next();
  int dp = rng.range(0, max_dim / 2);
  int dq = rng.range(0, (max_dim - dp) / 2);
  int dr = rng.range(0, max_dim - dp - dq);
  bool cartesian = rng.below(2) == 0 || dq == 0;
  CommutingSquare base = split_square(k, SplitSquareDims{dp, dq, dr});
  if (!cartesian) {
    // Shrink the apex to P alone: still admissible and commuting, but the
    // pullback gains the Q block back.
    Mat a_to_b(k, dp + dq + dr, dp);
    for (int i = 0; i < dp; ++i) a_to_b.set(i, i, 1);
    base = CommutingSquare{a_to_b, Mat::identity(k, dp), base.b_to_c, base.d_to_c};
  }
  return SquareSample{conjugate_square(rng, k, base), cartesian};
}

Extension gen_extension(const PiWindow& x, const PiWindow& z, std::uint64_t seed) {
  if (x.lo() != z.lo() || x.hi() != z.hi()) {
    throw std::invalid_argument("gen_extension: window bounds mismatch");
  }
  PrimeField k = x.field();
  Rng rng(seed ^ 0xe47e6510ULL);
  rng.next();
  int lo = x.lo(), hi = x.hi();
  std::size_t n = std::size_t(hi - lo + 1);
  std::vector<Mat> isos(n * n, Mat(k, 0, 0));
  auto at = [&](int i, int j) -> Mat& {
    return isos[std::size_t(i - lo) * n + std::size_t(j - lo)];
  };
  for (int i = lo; i <= hi; ++i) {
    for (int j = i; j <= hi; ++j) at(i, j) = random_invertible(rng, k, x.dim(i, j) + z.dim(i, j));
  }
  PiWindow total =
      conjugate(direct_sum(x, z), [&](int i, int j) -> const Mat& { return at(i, j); });
  std::vector<Mat> mono_comps(n * n, Mat(k, 0, 0));
  std::vector<Mat> epi_comps(n * n, Mat(k, 0, 0));
  for (int i = lo; i <= hi; ++i) {
    for (int j = i; j <= hi; ++j) {
      int dx = x.dim(i, j), dz = z.dim(i, j);
      mono_comps[std::size_t(i - lo) * n + std::size_t(j - lo)] = at(i, j) * split_mono(k, dx, dz);
      epi_comps[std::size_t(i - lo) * n + std::size_t(j - lo)] =
          split_epi(k, dx, dz) * inverse(at(i, j));
    }
  }
  PiMorphism mono(x, total, std::move(mono_comps));
  PiMorphism epi(total, z, std::move(epi_comps));
  return Extension{std::move(total), PiSes{std::move(mono), std::move(epi)}};
}

ThreeSquaresInstance gen_three_squares(std::uint64_t seed, int max_dim, std::uint32_t p) {
  require_dim_cap(max_dim, "gen_three_squares");
  PrimeField k{p};
  Rng rng(seed ^ 0x3047ac5ULL);
  rng.next();
  int half = std::max(1, max_dim / 2);
  auto dims = [&]() {
    int dp = rng.range(0, half / 2 + 1);
    int dq = rng.range(0, std::max(0, (half - dp) / 2));
    int dr = rng.range(0, std::max(0, half - dp - dq));
    return SplitSquareDims{dp, dq, dr};
  };
  CommutingSquare sp = split_square(k, dims());
  CommutingSquare sd = split_square(k, dims());
  CommutingSquare sm{direct_sum(sp.a_to_b, sd.a_to_b), direct_sum(sp.a_to_d, sd.a_to_d),
                     direct_sum(sp.b_to_c, sd.b_to_c), direct_sum(sp.d_to_c, sd.d_to_c)};
  auto block_ses = [&](int d1, int d2) {
    return SesTriple{split_mono(k, d1, d2), split_epi(k, d1, d2)};
  };
  ThreeSquaresInstance inst{
      sp,
      sm,
      sd,
      block_ses(sp.a_to_b.cols(), sd.a_to_b.cols()),
      block_ses(sp.a_to_b.rows(), sd.a_to_b.rows()),
      block_ses(sp.a_to_d.rows(), sd.a_to_d.rows()),
      block_ses(sp.b_to_c.rows(), sd.b_to_c.rows()),
  };
  // Hide the block structure: one change of basis per vertex of the cube.
  Mat gxp = random_invertible(rng, k, inst.primed.a_to_b.cols());
  Mat gyp = random_invertible(rng, k, inst.primed.a_to_b.rows());
  Mat gtp = random_invertible(rng, k, inst.primed.a_to_d.rows());
  Mat gzp = random_invertible(rng, k, inst.primed.b_to_c.rows());
  Mat gx = random_invertible(rng, k, inst.middle.a_to_b.cols());
  Mat gy = random_invertible(rng, k, inst.middle.a_to_b.rows());
  Mat gt = random_invertible(rng, k, inst.middle.a_to_d.rows());
  Mat gz = random_invertible(rng, k, inst.middle.b_to_c.rows());
  Mat gxd = random_invertible(rng, k, inst.double_primed.a_to_b.cols());
  Mat gyd = random_invertible(rng, k, inst.double_primed.a_to_b.rows());
  Mat gtd = random_invertible(rng, k, inst.double_primed.a_to_d.rows());
  Mat gzd = random_invertible(rng, k, inst.double_primed.b_to_c.rows());
  auto conj = [](const Mat& g_to, const Mat& m, const Mat& g_from) {
    return g_to * m * inverse(g_from);
  };
  ThreeSquaresInstance out{
      CommutingSquare{conj(gyp, inst.primed.a_to_b, gxp), conj(gtp, inst.primed.a_to_d, gxp),
                      conj(gzp, inst.primed.b_to_c, gyp), conj(gzp, inst.primed.d_to_c, gtp)},
      CommutingSquare{conj(gy, inst.middle.a_to_b, gx), conj(gt, inst.middle.a_to_d, gx),
                      conj(gz, inst.middle.b_to_c, gy), conj(gz, inst.middle.d_to_c, gt)},
      CommutingSquare{conj(gyd, inst.double_primed.a_to_b, gxd),
                      conj(gtd, inst.double_primed.a_to_d, gxd),
                      conj(gzd, inst.double_primed.b_to_c, gyd),
                      conj(gzd, inst.double_primed.d_to_c, gtd)},
      SesTriple{conj(gx, inst.ses_x.mono, gxp), conj(gxd, inst.ses_x.epi, gx)},
      SesTriple{conj(gy, inst.ses_y.mono, gyp), conj(gyd, inst.ses_y.epi, gy)},
      SesTriple{conj(gt, inst.ses_t.mono, gtp), conj(gtd, inst.ses_t.epi, gt)},
      SesTriple{conj(gz, inst.ses_z.mono, gzp), conj(gzd, inst.ses_z.epi, gz)},
  };
  return out;
}

Grid3x3 gen_grid_3x3(std::uint64_t seed, int max_dim, std::uint32_t p) {
  require_dim_cap(max_dim, "gen_grid_3x3");
  PrimeField k{p};
  Rng rng(seed ^ 0x9419d3ULL);
  rng.next();
  int half = std::max(1, max_dim / 2);
  int a1 = rng.range(0, half / 2 + 1), a2 = rng.range(0, std::max(0, half - a1));
  int c1 = rng.range(0, half / 2 + 1), c2 = rng.range(0, std::max(0, half - c1));
  // Top and bottom rows are split sequences, the middle row their direct
  // sum, columns the split inclusions/projections.
  std::array<int, 3> top{a1, a1 + a2, a2};
  std::array<int, 3> bottom{c1, c1 + c2, c2};
  std::array<std::array<int, 3>, 3> d{
      {top, {top[0] + bottom[0], top[1] + bottom[1], top[2] + bottom[2]}, bottom}};
  std::vector<std::vector<Mat>> row(3, std::vector<Mat>(2, Mat(k, 0, 0)));
  row[0][0] = split_mono(k, a1, a2);
  row[0][1] = split_epi(k, a1, a2);
  row[2][0] = split_mono(k, c1, c2);
  row[2][1] = split_epi(k, c1, c2);
  row[1][0] = direct_sum(row[0][0], row[2][0]);
  row[1][1] = direct_sum(row[0][1], row[2][1]);
  std::vector<std::vector<Mat>> col(2, std::vector<Mat>(3, Mat(k, 0, 0)));
  for (int c = 0; c < 3; ++c) {
    col[0][std::size_t(c)] = split_mono(k, top[std::size_t(c)], bottom[std::size_t(c)]);
    col[1][std::size_t(c)] = split_epi(k, top[std::size_t(c)], bottom[std::size_t(c)]);
  }
  std::vector<std::vector<Mat>> iso(3, std::vector<Mat>(3, Mat(k, 0, 0)));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      iso[std::size_t(r)][std::size_t(c)] =
          random_invertible(rng, k, d[std::size_t(r)][std::size_t(c)]);
    }
  }
  auto rowm = [&](int r, int c) {
    return iso[std::size_t(r)][std::size_t(c + 1)] * row[std::size_t(r)][std::size_t(c)] *
           inverse(iso[std::size_t(r)][std::size_t(c)]);
  };
  auto colm = [&](int r, int c) {
    return iso[std::size_t(r + 1)][std::size_t(c)] * col[std::size_t(r)][std::size_t(c)] *
           inverse(iso[std::size_t(r)][std::size_t(c)]);
  };
  return Grid3x3{{{{rowm(0, 0), rowm(0, 1)}, {rowm(1, 0), rowm(1, 1)}, {rowm(2, 0), rowm(2, 1)}}},
                 {{{colm(0, 0), colm(0, 1), colm(0, 2)}, {colm(1, 0), colm(1, 1), colm(1, 2)}}}};
}

IndWindow gen_random_ind_window(Rng& rng, std::uint32_t p, int max_dim, int max_len) {
  PrimeField k{p};
  int len = rng.range(1, std::max(1, max_len));
  std::vector<int> dims;
  for (int i = 0; i <= len; ++i) dims.push_back(rng.range(0, max_dim));
  std::vector<Mat> maps;
  for (int i = 0; i < len; ++i) {
    maps.push_back(random_mat(rng, k, dims[std::size_t(i + 1)], dims[std::size_t(i)]));
  }
  return IndWindow(k, std::move(dims), std::move(maps));
}

ProWindow gen_random_pro_window(Rng& rng, std::uint32_t p, int max_dim, int max_len) {
  PrimeField k{p};
  int len = rng.range(1, std::max(1, max_len));
  std::vector<int> dims;
  for (int i = 0; i <= len; ++i) dims.push_back(rng.range(0, max_dim));
  std::vector<Mat> maps;
  for (int i = 0; i < len; ++i) {
    maps.push_back(random_mat(rng, k, dims[std::size_t(i)], dims[std::size_t(i + 1)]));
  }
  return ProWindow(k, std::move(dims), std::move(maps));
}

IndWindow gen_strict_chain(Rng& rng, std::uint32_t p, int max_dim, int len) {
  PrimeField k{p};
  std::vector<int> dims(std::size_t(len + 1));
  dims[0] = 0;
  for (int t = 1; t <= len; ++t) {
    dims[std::size_t(t)] = std::min(max_dim, dims[std::size_t(t - 1)] + rng.range(0, 2));
  }
  std::vector<Mat> maps;
  for (int t = 0; t < len; ++t) {
    Mat incl = split_mono(k, dims[std::size_t(t)], dims[std::size_t(t + 1)] - dims[std::size_t(t)]);
    maps.push_back(random_invertible(rng, k, dims[std::size_t(t + 1)]) * incl *
                   random_invertible(rng, k, dims[std::size_t(t)]));
  }
  return IndWindow(k, std::move(dims), std::move(maps));
}

namespace {

// Natural transformation through a shared block: X = iso(A (+) B),
// Y = iso(A (+) C), f = include-project on A.
struct StraightPair {
  IndWindow x;
  IndWindow y;
  std::vector<Mat> comps;
};

StraightPair gen_block_morphism(Rng& rng, std::uint32_t p, int max_dim, int len) {
  PrimeField k{p};
  auto piece = [&](int cap) {
    std::vector<int> dims;
    std::vector<Mat> maps;
    for (int i = 0; i <= len; ++i) dims.push_back(rng.range(0, cap));
    for (int i = 0; i < len; ++i) {
      maps.push_back(random_mat(rng, k, dims[std::size_t(i + 1)], dims[std::size_t(i)]));
    }
    return IndWindow(k, std::move(dims), std::move(maps));
  };
  IndWindow a = piece(std::max(1, max_dim / 2));
  IndWindow b = piece(std::max(1, max_dim / 2));
  IndWindow c = piece(std::max(1, max_dim / 2));

  std::vector<Mat> gx, gy;
  for (int i = 0; i <= len; ++i) {
    gx.push_back(random_invertible(rng, k, a.dim_at(i) + b.dim_at(i)));
    gy.push_back(random_invertible(rng, k, a.dim_at(i) + c.dim_at(i)));
  }
  std::vector<int> xdims, ydims;
  std::vector<Mat> xmaps, ymaps;
  for (int i = 0; i <= len; ++i) {
    xdims.push_back(a.dim_at(i) + b.dim_at(i));
    ydims.push_back(a.dim_at(i) + c.dim_at(i));
  }
  for (int i = 0; i < len; ++i) {
    xmaps.push_back(gx[std::size_t(i + 1)] * direct_sum(a.map_at(i), b.map_at(i)) *
                    inverse(gx[std::size_t(i)]));
    ymaps.push_back(gy[std::size_t(i + 1)] * direct_sum(a.map_at(i), c.map_at(i)) *
                    inverse(gy[std::size_t(i)]));
  }
  std::vector<Mat> comps;
  for (int i = 0; i <= len; ++i) {
    int da = a.dim_at(i), db = b.dim_at(i), dc = c.dim_at(i);
    Mat carry(k, da + dc, da + db);
    for (int t = 0; t < da; ++t) carry.set(t, t, 1);
    comps.push_back(gy[std::size_t(i)] * carry * inverse(gx[std::size_t(i)]));
  }
  return StraightPair{IndWindow(k, std::move(xdims), std::move(xmaps)),
                      IndWindow(k, std::move(ydims), std::move(ymaps)), std::move(comps)};
}

}  // namespace

Report localizing_axioms_check(int trials, std::uint64_t seed, std::uint32_t p, int max_dim) {
  require_dim_cap(max_dim, "localizing_axioms_check");
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, std::uint64_t(t));
    int len = rng.range(2, 4);
    StraightPair pair = gen_block_morphism(rng, p, max_dim, len);
    const IndWindow& x = pair.x;
    const IndWindow& y = pair.y;
    IndMorphism f(x, y, pair.comps);

    // Denominator reindexing with id <= phi and phi(i) > i somewhere.
    std::vector<int> w;
    int v = rng.range(1, 2);
    for (int i = 0; i <= len; ++i) {
      w.push_back(i + v);
      v += rng.range(0, 1);
    }
    CofinalMap phi{w};

    int bound = len + phi.eval(len) + 2;

    // Ore square: the denominator on the target against the reindexed map.
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= bound && ok; ++i) {
      Mat lhs = y.transport(i, phi.eval(i)) * f.component_at(i);
      Mat rhs = f.component_at(phi.eval(i)) * x.transport(i, phi.eval(i));
      if (lhs != rhs) {
        ok = false;
        detail = "reindexing square broke at index " + std::to_string(i);
      }
    }

    // Equalized pair: g differs from f at one index by a perturbation the
    // denominator kills; the floor-inverse reindexing must equalize them.
    int star = rng.range(0, 1);
    Subspace killer = kernel(y.map_at(star));
    Mat z(y.field(), y.dim_at(star), x.dim_at(star));
    if (killer.dim() > 0) {
      if (star == 0) {
        z = killer.basis * random_mat(rng, y.field(), killer.dim(), x.dim_at(star));
      } else {
        Mat q = cokernel(x.map_at(star - 1));
        z = killer.basis * random_mat(rng, y.field(), killer.dim(), q.rows()) * q;
      }
    }
    std::vector<Mat> gcomps = pair.comps;
    gcomps[std::size_t(star)] = gcomps[std::size_t(star)] + z;
    IndMorphism g(x, y, gcomps);

    // The denominator really equalizes s.f and s.g.
    for (int i = 0; i <= bound && ok; ++i) {
      Mat sf = y.transport(i, phi.eval(i)) * f.component_at(i);
      Mat sg = y.transport(i, phi.eval(i)) * g.component_at(i);
      if (sf != sg) {
        ok = false;
        detail = "denominator failed to equalize at index " + std::to_string(i);
      }
    }

    CofinalMap psi = floor_inverse(phi, bound);
    for (int j = 1; j <= bound && ok; ++j) {
      Mat ft = f.component_at(j) * x.transport(psi.eval(j), j);
      Mat gt = g.component_at(j) * x.transport(psi.eval(j), j);
      if (ft != gt) {
        ok = false;
        detail = "floor-inverse reindexing failed to equalize at index " + std::to_string(j);
      }
    }

    if (ok) {
      rep.pass(t);
    } else {
      rep.fail(t, detail);
    }
  }
  return rep;
}

Report cartesian_agreement_check(int trials, std::uint64_t seed, std::uint32_t p, int max_dim) {
  require_dim_cap(max_dim, "cartesian_agreement_check");
  Report rep;
  for (int t = 0; t < trials; ++t) {
    SquareSample s =
        gen_random_admissible_square_mixed(trial_rng(seed, std::uint64_t(t)).next(), max_dim, p);
    bool cart = is_cartesian(s.square);
    bool cocart = is_cocartesian(s.square);
    if (cart != cocart) {
      rep.fail(t, "cartesian/cocartesian verdicts disagree");
    } else if (s.built_cartesian && !cart) {
      rep.fail(t, "split-model square not recognized as cartesian");
    } else if (!s.built_cartesian && cart) {
      rep.fail(t, "shrunken square wrongly cartesian");
    } else {
      rep.pass(t);
    }
  }
  return rep;
}

Report three_squares_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim) {
  Report rep;
  for (int t = 0; t < trials; ++t) {
    ThreeSquaresInstance inst =
        gen_three_squares(trial_rng(seed, std::uint64_t(t)).next(), max_dim, p);
    if (three_squares_check(inst)) {
      rep.pass(t);
    } else {
      rep.fail(t, "middle square is not cartesian");
      rep.failure_dumps.emplace_back("three-squares-trial" + std::to_string(t) + ".json",
                                     io::serialize(io::doc_of(inst)));
    }
  }
  return rep;
}

Report middle_3x3_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim) {
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Grid3x3 g = gen_grid_3x3(trial_rng(seed, std::uint64_t(t)).next(), max_dim, p);
    if (middle_3x3_check(g)) {
      rep.pass(t);
    } else {
      rep.fail(t, "middle row is not short exact");
    }
  }
  return rep;
}

Report extension_closure_check(const PiWindow& x, const PiWindow& z, int trials,
                               std::uint64_t seed) {
  if (!is_kato(x).ok || !is_kato(z).ok) {
    throw std::invalid_argument("extension_closure_check: inputs must be Kato windows");
  }
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Extension ext = gen_extension(x, z, trial_rng(seed, std::uint64_t(t)).next());
    if (!is_pi_ses(ext.ses)) {
      rep.fail(t, "generated extension is not componentwise short exact");
      rep.failure_dumps.emplace_back("extension-trial" + std::to_string(t) + ".json",
                                     io::serialize(io::doc_of(ext.total)));
      continue;
    }
    KatoReport kr = is_kato(ext.total);
    if (kr.ok) {
      rep.pass(t);
    } else {
      rep.fail(t, "extension lost the Kato property at square (" +
                      std::to_string((*kr.failing_square)[0]) + "," +
                      std::to_string((*kr.failing_square)[1]) + ")");
      rep.failure_dumps.emplace_back("extension-trial" + std::to_string(t) + ".json",
                                     io::serialize(io::doc_of(ext.total)));
    }
  }
  return rep;
}

Report extension_closure_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim,
                                int lo, int hi) {
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, std::uint64_t(t));
    PiWindow x = random_kato_window(p, lo, hi, std::max(1, max_dim / 2), rng.next());
    PiWindow z = random_kato_window(p, lo, hi, std::max(1, max_dim / 2), rng.next());
    Report one = extension_closure_check(x, z, 1, rng.next());
    if (one.failures == 0) {
      rep.pass(t);
    } else {
      rep.fail(t, one.lines.back());
      for (auto& d : one.failure_dumps) rep.failure_dumps.push_back(std::move(d));
    }
  }
  return rep;
}

Report ind_closure_check(const PiWindow& x, const PiWindow& z, int trials, std::uint64_t seed) {
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Extension ext = gen_extension(x, z, trial_rng(seed, std::uint64_t(t)).next());
    const PiWindow& y = ext.total;
    bool ok = is_pi_ses(ext.ses);
    std::string detail = ok ? "" : "generated extension is not componentwise short exact";
    if (ok && y.dim(y.lo(), y.lo()) != 0) {
      ok = false;
      detail = "cell below the seam is not zero";
    }
    for (int j = y.lo() + 1; j <= y.hi() && ok; ++j) {
      const Mat& e = y.epi(y.lo(), j);
      if (e.rows() != e.cols() || rank(e) != e.rows()) {
        ok = false;
        detail = "pro-direction map at row " + std::to_string(y.lo()) + ", column " +
                 std::to_string(j) + " is not an isomorphism";
      }
    }
    if (ok) {
      rep.pass(t);
    } else {
      rep.fail(t, detail);
      rep.failure_dumps.emplace_back("ind-closure-trial" + std::to_string(t) + ".json",
                                     io::serialize(io::doc_of(y)));
    }
  }
  return rep;
}

Report ind_closure_report(int trials, std::uint64_t seed, std::uint32_t p, int max_dim) {
  Report rep;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, std::uint64_t(t));
    int len = rng.range(2, 4);
    PiWindow x = embed_ind_window(gen_strict_chain(rng, p, std::max(1, max_dim / 2), len));
    PiWindow z = embed_ind_window(gen_strict_chain(rng, p, std::max(1, max_dim / 2), len));
    Report one = ind_closure_check(x, z, 1, rng.next());
    if (one.failures == 0) {
      rep.pass(t);
    } else {
      rep.fail(t, one.lines.back());
      for (auto& d : one.failure_dumps) rep.failure_dumps.push_back(std::move(d));
    }
  }
  return rep;
}

}  // namespace indpro::harness
