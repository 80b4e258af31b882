#include "indpro/linalg.hpp"

#include <string>

namespace indpro {

Rref rref(const Mat& a) {
  PrimeField k = a.field();
  Mat m = a;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < m.cols(); ++j) {
        std::uint32_t t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    }
    std::uint32_t s = k.inv(m.at(r, c));
    for (int j = 0; j < m.cols(); ++j) m.set(r, j, k.mul(m.at(r, j), s));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, c);
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j) {
        m.set(i, j, k.sub(m.at(i, j), k.mul(f, m.at(r, j))));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots), r};
}

int rank(const Mat& a) { return rref(a).rank; }

bool is_injective(const Mat& f) { return rank(f) == f.cols(); }
bool is_surjective(const Mat& f) { return rank(f) == f.rows(); }

Mat column_echelon_basis(const Mat& a) {
  Rref rt = rref(transpose(a));
  // Nonzero rows of rref(a^T), transposed back, give the canonical basis.
  Mat b(a.field(), a.rows(), rt.rank);
  for (int i = 0; i < rt.rank; ++i)
    for (int j = 0; j < a.rows(); ++j) b.set(j, i, rt.m.at(i, j));
  return b;
}

Subspace kernel(const Mat& f) {
  Rref r = rref(f);
  int n = f.cols();
  int kdim = n - r.rank;
  Mat basis(f.field(), n, kdim);
  std::vector<bool> is_pivot(std::size_t(n), false);
  for (int c : r.pivot_cols) is_pivot[std::size_t(c)] = true;
  int out = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[std::size_t(c)]) continue;
    basis.set(c, out, 1);
    for (int i = 0; i < r.rank; ++i) {
      basis.set(r.pivot_cols[std::size_t(i)], out, f.field().neg(r.m.at(i, c)));
    }
    ++out;
  }
  return Subspace{n, column_echelon_basis(basis)};
}

Subspace image(const Mat& f) { return Subspace{f.rows(), column_echelon_basis(f)}; }

Mat cokernel(const Mat& f) {
  PrimeField k = f.field();
  int m = f.rows();
  Mat b = column_echelon_basis(f);
  int r = b.cols();
  // Complete the image basis with standard vectors at non-pivot rows, then
  // project onto the complement coordinates.
  std::vector<bool> pivot_row(std::size_t(m), false);
  for (int c = 0; c < r; ++c) {
    for (int i = 0; i < m; ++i) {
      if (b.at(i, c) != 0) {
        pivot_row[std::size_t(i)] = true;
        break;
      }
    }
  }
  Mat full(k, m, m);
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < m; ++i) full.set(i, c, b.at(i, c));
  int out = r;
  for (int i = 0; i < m; ++i) {
    if (!pivot_row[std::size_t(i)]) {
      full.set(i, out, 1);
      ++out;
    }
  }
  Mat inv = inverse(full);
  Mat q(k, m - r, m);
  for (int i = 0; i < m - r; ++i)
    for (int j = 0; j < m; ++j) q.set(i, j, inv.at(r + i, j));
  return q;
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) {
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  }
  require_same_field(s1.basis, s2.basis, "intersect");
  Mat joint = hstack(s1.basis, s2.basis);
  Subspace ker = kernel(joint);
  Mat top(s1.basis.field(), s1.basis.cols(), ker.dim());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) top.set(i, j, ker.basis.at(i, j));
  return Subspace{s1.ambient, column_echelon_basis(s1.basis * top)};
}

bool subspace_eq(const Subspace& s1, const Subspace& s2) {
  return s1.ambient == s2.ambient && s1.basis == s2.basis;
}

bool subspace_contains(const Subspace& s, const Mat& vectors) {
  if (vectors.rows() != s.ambient) {
    throw std::invalid_argument("subspace_contains: ambient mismatch");
  }
  return solve(s.basis, vectors).has_value();
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a, b, "solve");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Rref r = rref(hstack(a, b));
  for (int c : r.pivot_cols) {
    if (c >= a.cols()) return std::nullopt;
  }
  Mat x(a.field(), a.cols(), b.cols());
  for (int i = 0; i < int(r.pivot_cols.size()); ++i) {
    int pc = r.pivot_cols[std::size_t(i)];
    for (int j = 0; j < b.cols(); ++j) x.set(pc, j, r.m.at(i, a.cols() + j));
  }
  return x;
}

Mat left_inverse(const Mat& a) {
  auto s = solve(transpose(a), Mat::identity(a.field(), a.cols()));
  if (!s) throw std::invalid_argument("left_inverse: map is not injective");
  return transpose(*s);
}

Mat right_inverse(const Mat& a) {
  auto s = solve(a, Mat::identity(a.field(), a.rows()));
  if (!s) throw std::invalid_argument("right_inverse: map is not surjective");
  return *s;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  auto s = solve(a, Mat::identity(a.field(), a.rows()));
  if (!s) throw std::invalid_argument("inverse: singular matrix");
  return *s;
}

bool is_exact_at(const Mat& f, const Mat& g) {
  require_same_field(f, g, "is_exact_at");
  if (f.rows() != g.cols()) throw std::invalid_argument("is_exact_at: maps not composable");
  return subspace_eq(image(f), kernel(g));
}

bool is_ses(const SesTriple& t) {
  require_same_field(t.mono, t.epi, "is_ses");
  if (t.mono.rows() != t.epi.cols()) throw std::invalid_argument("is_ses: maps not composable");
  return is_injective(t.mono) && is_surjective(t.epi) && is_exact_at(t.mono, t.epi);
}

PullbackResult pullback(const Mat& f, const Mat& g) {
  require_same_field(f, g, "pullback");
  if (f.rows() != g.rows()) throw std::invalid_argument("pullback: codomain mismatch");
  // Apex is the kernel of [f | -g] on b (+) d.
  Mat joint = hstack(f, negate(g));
  Subspace ker = kernel(joint);
  int b = f.cols(), d = g.cols();
  Mat to_b(f.field(), b, ker.dim());
  Mat to_d(f.field(), d, ker.dim());
  for (int j = 0; j < ker.dim(); ++j) {
    for (int i = 0; i < b; ++i) to_b.set(i, j, ker.basis.at(i, j));
    for (int i = 0; i < d; ++i) to_d.set(i, j, ker.basis.at(b + i, j));
  }
  return PullbackResult{ker.dim(), std::move(to_b), std::move(to_d)};
}

PushoutResult pushout(const Mat& f, const Mat& g) {
  require_same_field(f, g, "pushout");
  if (f.cols() != g.cols()) throw std::invalid_argument("pushout: domain mismatch");
  // Apex is the cokernel of [f ; -g] into b (+) d.
  Mat joint = vstack(f, negate(g));
  Mat q = cokernel(joint);
  int b = f.rows(), d = g.rows();
  Mat from_b(f.field(), q.rows(), b);
  Mat from_d(f.field(), q.rows(), d);
  for (int i = 0; i < q.rows(); ++i) {
    for (int j = 0; j < b; ++j) from_b.set(i, j, q.at(i, j));
    for (int j = 0; j < d; ++j) from_d.set(i, j, q.at(i, b + j));
  }
  return PushoutResult{q.rows(), std::move(from_b), std::move(from_d)};
}

bool square_commutes(const CommutingSquare& s) {
  return s.b_to_c * s.a_to_b == s.d_to_c * s.a_to_d;
}

bool square_admissible(const CommutingSquare& s) {
  return is_injective(s.a_to_b) && is_injective(s.d_to_c) && is_surjective(s.a_to_d) &&
         is_surjective(s.b_to_c);
}

namespace {
void require_commutes(const CommutingSquare& s, const char* where) {
  if (!square_commutes(s)) {
    throw square_commutation_error(std::string(where) + ": square does not commute");
  }
}
}  // namespace

bool is_cartesian(const CommutingSquare& s) {
  require_commutes(s, "is_cartesian");
  PullbackResult p = pullback(s.b_to_c, s.d_to_c);
  int a = s.a_to_b.cols();
  if (p.apex_dim != a) return false;
  auto w = pullback_mediator(p, s.a_to_b, s.a_to_d);
  return w && rank(*w) == a;
}

bool is_cocartesian(const CommutingSquare& s) {
  require_commutes(s, "is_cocartesian");
  PushoutResult p = pushout(s.a_to_b, s.a_to_d);
  int c = s.b_to_c.rows();
  if (p.apex_dim != c) return false;
  auto w = pushout_mediator(p, s.b_to_c, s.d_to_c);
  return w && rank(*w) == c;
}

std::optional<Mat> pullback_mediator(const PullbackResult& p, const Mat& u, const Mat& v) {
  return solve(vstack(p.to_b, p.to_d), vstack(u, v));
}

std::optional<Mat> pushout_mediator(const PushoutResult& p, const Mat& h, const Mat& k) {
  auto wt = solve(transpose(hstack(p.from_b, p.from_d)), transpose(hstack(h, k)));
  if (!wt) return std::nullopt;
  return transpose(*wt);
}

}  // namespace indpro
