#include "indpro/pi_window.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indpro {

namespace {

[[noreturn]] void fail(const char* where, const std::string& what) {
  throw std::invalid_argument(std::string(where) + ": " + what);
}

int clamp(int v, int lo, int hi) { return std::max(lo, std::min(v, hi)); }

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::size_t PiWindow::idx(int i, int j) const {
  return std::size_t(i - lo_) * std::size_t(hi_ - lo_ + 1) + std::size_t(j - lo_);
}

PiWindow::PiWindow(PrimeField field, int lo, int hi, std::vector<int> dims,
                   std::vector<Mat> epis, std::vector<Mat> monos)
    : field_(field), lo_(lo), hi_(hi), dims_(std::move(dims)), epis_(std::move(epis)),
      monos_(std::move(monos)) {
  if (lo_ > hi_) fail("PiWindow", "lo > hi");
  std::size_t n = std::size_t(hi_ - lo_ + 1);
  if (dims_.size() != n * n || epis_.size() != n * n || monos_.size() != n * n) {
    fail("PiWindow", "storage size mismatch");
  }
  for (int i = lo_; i <= hi_; ++i) {
    if (dims_[idx(i, i)] != 0) {
      fail("PiWindow", "diagonal cell " + cell(i, i) + " must have dimension 0");
    }
    for (int j = i; j <= hi_; ++j) {
      if (dims_[idx(i, j)] < 0) fail("PiWindow", "negative dimension at " + cell(i, j));
    }
  }
  for (int i = lo_; i <= hi_; ++i) {
    for (int j = i + 1; j <= hi_; ++j) {
      const Mat& e = epis_[idx(i, j)];
      if (e.field() != field_) fail("PiWindow", "field mismatch in epi at " + cell(i, j));
      if (e.cols() != dims_[idx(i, j)] || e.rows() != dims_[idx(i + 1, j)]) {
        fail("PiWindow", "epi at " + cell(i, j) + " has wrong shape");
      }
    }
  }
  for (int i = lo_; i <= hi_; ++i) {
    for (int j = i; j < hi_; ++j) {
      const Mat& m = monos_[idx(i, j)];
      if (m.field() != field_) fail("PiWindow", "field mismatch in mono at " + cell(i, j));
      if (m.cols() != dims_[idx(i, j)] || m.rows() != dims_[idx(i, j + 1)]) {
        fail("PiWindow", "mono at " + cell(i, j) + " has wrong shape");
      }
    }
  }
  // Elementary squares commute.
  for (int i = lo_; i <= hi_; ++i) {
    for (int j = i + 1; j < hi_; ++j) {
      Mat lhs = epis_[idx(i, j + 1)] * monos_[idx(i, j)];
      Mat rhs = monos_[idx(i + 1, j)] * epis_[idx(i, j)];
      if (lhs != rhs) fail("PiWindow", "square at " + cell(i, j) + " does not commute");
    }
  }
}

int PiWindow::dim(int i, int j) const {
  if (i < lo_ || j > hi_ || i > j) fail("PiWindow::dim", "cell " + cell(i, j) + " out of window");
  return dims_[idx(i, j)];
}

const Mat& PiWindow::epi(int i, int j) const {
  if (i < lo_ || j > hi_ || i + 1 > j) fail("PiWindow::epi", "no epi at " + cell(i, j));
  return epis_[idx(i, j)];
}

const Mat& PiWindow::mono(int i, int j) const {
  if (i < lo_ || i > j || j + 1 > hi_) fail("PiWindow::mono", "no mono at " + cell(i, j));
  return monos_[idx(i, j)];
}

int PiWindow::dim_clamped(int i, int j) const {
  if (i > j) fail("PiWindow::dim_clamped", "requires i <= j");
  return dims_[idx(clamp(i, lo_, hi_), clamp(j, lo_, hi_))];
}

Mat PiWindow::transport(int i, int j, int i2, int j2) const {
  if (i > j || i2 > j2) fail("PiWindow::transport", "points must satisfy i <= j");
  if (i > i2 || j > j2) fail("PiWindow::transport", "target must dominate source");
  int ci = clamp(i, lo_, hi_), cj = clamp(j, lo_, hi_);
  int ci2 = clamp(i2, lo_, hi_), cj2 = clamp(j2, lo_, hi_);
  Mat m = Mat::identity(field_, dims_[idx(ci, cj)]);
  for (int t = cj; t < cj2; ++t) m = monos_[idx(ci, t)] * m;
  for (int t = ci; t < ci2; ++t) m = epis_[idx(t, cj2)] * m;
  return m;
}

bool operator==(const PiWindow& x, const PiWindow& y) {
  if (x.field_ != y.field_ || x.lo_ != y.lo_ || x.hi_ != y.hi_) return false;
  return x.dims_ == y.dims_ && x.epis_ == y.epis_ && x.monos_ == y.monos_;
}

PiWindowBuilder::PiWindowBuilder(PrimeField field, int lo, int hi)
    : field_(field), lo_(lo), hi_(hi) {
  if (lo > hi) fail("PiWindowBuilder", "lo > hi");
  std::size_t n = std::size_t(hi - lo + 1);
  dims_.resize(n * n);
  epis_.resize(n * n);
  monos_.resize(n * n);
  for (int i = lo; i <= hi; ++i) set_dim(i, i, 0);
}

std::size_t PiWindowBuilder::idx(int i, int j) const {
  return std::size_t(i - lo_) * std::size_t(hi_ - lo_ + 1) + std::size_t(j - lo_);
}

void PiWindowBuilder::set_dim(int i, int j, int d) {
  if (i < lo_ || j > hi_ || i > j) fail("PiWindowBuilder::set_dim", "cell out of window");
  dims_[idx(i, j)] = d;
}

void PiWindowBuilder::set_epi(int i, int j, Mat m) {
  if (i < lo_ || j > hi_ || i + 1 > j) fail("PiWindowBuilder::set_epi", "cell out of window");
  epis_[idx(i, j)] = std::move(m);
}

void PiWindowBuilder::set_mono(int i, int j, Mat m) {
  if (i < lo_ || i > j || j + 1 > hi_) fail("PiWindowBuilder::set_mono", "cell out of window");
  monos_[idx(i, j)] = std::move(m);
}

PiWindow PiWindowBuilder::build() const {
  std::size_t n = std::size_t(hi_ - lo_ + 1);
  std::vector<int> dims(n * n, 0);
  std::vector<Mat> epis(n * n, Mat(field_, 0, 0));
  std::vector<Mat> monos(n * n, Mat(field_, 0, 0));
  for (int i = lo_; i <= hi_; ++i) {
    for (int j = i; j <= hi_; ++j) {
      if (!dims_[idx(i, j)]) fail("PiWindowBuilder", "missing dimension at " + cell(i, j));
      dims[idx(i, j)] = *dims_[idx(i, j)];
    }
  }
  for (int i = lo_; i <= hi_; ++i) {
    for (int j = i + 1; j <= hi_; ++j) {
      if (!epis_[idx(i, j)]) fail("PiWindowBuilder", "missing epi at " + cell(i, j));
      epis[idx(i, j)] = *epis_[idx(i, j)];
    }
    for (int j = i; j < hi_; ++j) {
      if (!monos_[idx(i, j)]) fail("PiWindowBuilder", "missing mono at " + cell(i, j));
      monos[idx(i, j)] = *monos_[idx(i, j)];
    }
  }
  return PiWindow(field_, lo_, hi_, std::move(dims), std::move(epis), std::move(monos));
}

AdmissibleReport is_admissible(const PiWindow& x) {
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i; j <= x.hi(); ++j) {
      for (int k = j; k <= x.hi(); ++k) {
        Mat mono = x.transport(i, j, i, k);
        Mat epi = x.transport(i, k, j, k);
        if (!is_ses(SesTriple{mono, epi})) {
          return AdmissibleReport{false, std::array<int, 3>{i, j, k}};
        }
      }
    }
  }
  return AdmissibleReport{true, std::nullopt};
}

KatoReport is_kato(const PiWindow& x) {
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i + 1; j <= x.hi(); ++j) {
      if (!is_surjective(x.epi(i, j))) return KatoReport{false, std::array<int, 2>{i, j}};
    }
    for (int j = i; j < x.hi(); ++j) {
      if (!is_injective(x.mono(i, j))) return KatoReport{false, std::array<int, 2>{i, j}};
    }
  }
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i + 1; j < x.hi(); ++j) {
      CommutingSquare sq{x.mono(i, j), x.epi(i, j), x.epi(i, j + 1), x.mono(i + 1, j)};
      if (!is_cartesian(sq) || !is_cocartesian(sq)) {
        return KatoReport{false, std::array<int, 2>{i, j}};
      }
    }
  }
  return KatoReport{true, std::nullopt};
}

bool square_ses_roundtrip(const PiWindow& x) {
  if (!is_kato(x).ok) {
    fail("square_ses_roundtrip", "window is not a Kato window");
  }
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int i2 = i; i2 <= x.hi(); ++i2) {
      for (int j = i2; j <= x.hi(); ++j) {
        for (int j2 = j; j2 <= x.hi(); ++j2) {
          Mat m = x.transport(i, j, i, j2);
          Mat e = x.transport(i, j, i2, j);
          Mat e2 = x.transport(i, j2, i2, j2);
          Mat m2 = x.transport(i2, j, i2, j2);
          SesTriple t{vstack(m, e), hstack(e2, negate(m2))};
          if (!is_ses(t)) return false;
        }
      }
    }
  }
  return true;
}

int FullGridView::dim(int i, int j) const { return i > j ? 0 : w_->dim_clamped(i, j); }

Mat FullGridView::map(int i, int j, int i2, int j2) const {
  if (i > i2 || j > j2) fail("FullGridView::map", "target must dominate source");
  if (i > j) return Mat(w_->field(), dim(i2, j2), 0);
  if (i2 > j2) return Mat(w_->field(), 0, dim(i, j));
  return w_->transport(i, j, i2, j2);
}

PiWindow reindex(const PiWindow& x, const BicofinalMap& phi, int out_lo, int out_hi) {
  if (!is_bicofinal(phi)) fail("reindex", "map is not bicofinal");
  if (out_lo > out_hi) fail("reindex", "empty output window");
  if (phi.eval(out_lo) < x.lo() || phi.eval(out_hi) > x.hi()) {
    fail("reindex", "window underflow: reindexing leaves the stored window");
  }
  PiWindowBuilder b(x.field(), out_lo, out_hi);
  for (int i = out_lo; i <= out_hi; ++i) {
    for (int j = i; j <= out_hi; ++j) {
      b.set_dim(i, j, x.dim_clamped(phi.eval(i), phi.eval(j)));
      if (i + 1 <= j) {
        b.set_epi(i, j, x.transport(phi.eval(i), phi.eval(j), phi.eval(i + 1), phi.eval(j)));
      }
      if (j + 1 <= out_hi) {
        b.set_mono(i, j, x.transport(phi.eval(i), phi.eval(j), phi.eval(i), phi.eval(j + 1)));
      }
    }
  }
  return b.build();
}

PiWindow restrict_or_extend(const PiWindow& x, int out_lo, int out_hi) {
  if (out_lo > out_hi) fail("restrict_or_extend", "empty output window");
  PiWindowBuilder b(x.field(), out_lo, out_hi);
  for (int i = out_lo; i <= out_hi; ++i) {
    for (int j = i; j <= out_hi; ++j) {
      b.set_dim(i, j, x.dim_clamped(i, j));
      if (i + 1 <= j) b.set_epi(i, j, x.transport(i, j, i + 1, j));
      if (j + 1 <= out_hi) b.set_mono(i, j, x.transport(i, j, i, j + 1));
    }
  }
  return b.build();
}

PiWindow dualize(const PiWindow& x) {
  int lo = -x.hi(), hi = -x.lo();
  PiWindowBuilder b(x.field(), lo, hi);
  for (int i = lo; i <= hi; ++i) {
    for (int j = i; j <= hi; ++j) {
      b.set_dim(i, j, x.dim(-j, -i));
      if (i + 1 <= j) b.set_epi(i, j, transpose(x.mono(-j, -i - 1)));
      if (j + 1 <= hi) b.set_mono(i, j, transpose(x.epi(-j - 1, -i)));
    }
  }
  return b.build();
}

std::size_t PiMorphism::idx(int i, int j) const {
  int lo = src_.lo(), hi = src_.hi();
  return std::size_t(i - lo) * std::size_t(hi - lo + 1) + std::size_t(j - lo);
}

PiMorphism::PiMorphism(PiWindow src, PiWindow dst, std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("PiMorphism", "field mismatch");
  if (src_.lo() != dst_.lo() || src_.hi() != dst_.hi()) fail("PiMorphism", "bounds mismatch");
  std::size_t n = std::size_t(src_.span() + 1);
  if (comps_.size() != n * n) fail("PiMorphism", "component storage size mismatch");
  for (int i = src_.lo(); i <= src_.hi(); ++i) {
    for (int j = i; j <= src_.hi(); ++j) {
      const Mat& f = comps_[idx(i, j)];
      if (f.rows() != dst_.dim(i, j) || f.cols() != src_.dim(i, j)) {
        fail("PiMorphism", "component at " + cell(i, j) + " has wrong shape");
      }
      if (i + 1 <= j) {
        if (comps_[idx(i + 1, j)] * src_.epi(i, j) != dst_.epi(i, j) * f) {
          fail("PiMorphism", "naturality fails at epi " + cell(i, j));
        }
      }
      if (j + 1 <= src_.hi()) {
        if (comps_[idx(i, j + 1)] * src_.mono(i, j) != dst_.mono(i, j) * f) {
          fail("PiMorphism", "naturality fails at mono " + cell(i, j));
        }
      }
    }
  }
}

PiMorphism PiMorphism::identity(const PiWindow& x) {
  std::size_t n = std::size_t(x.span() + 1);
  std::vector<Mat> comps(n * n, Mat(x.field(), 0, 0));
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i; j <= x.hi(); ++j) {
      comps[std::size_t(i - x.lo()) * n + std::size_t(j - x.lo())] =
          Mat::identity(x.field(), x.dim(i, j));
    }
  }
  return PiMorphism(x, x, std::move(comps));
}

const Mat& PiMorphism::component(int i, int j) const {
  if (i < src_.lo() || j > src_.hi() || i > j) {
    fail("PiMorphism::component", "cell out of window");
  }
  return comps_[idx(i, j)];
}

bool is_pi_ses(const PiSes& s) {
  if (!(s.mono.dst() == s.epi.src())) fail("is_pi_ses", "endpoint mismatch");
  const PiWindow& y = s.mono.dst();
  for (int i = y.lo(); i <= y.hi(); ++i) {
    for (int j = i; j <= y.hi(); ++j) {
      if (!is_ses(SesTriple{s.mono.component(i, j), s.epi.component(i, j)})) return false;
    }
  }
  return true;
}

std::size_t PiRoof::idx(int i, int j) const {
  return std::size_t(i - glo_) * std::size_t(ghi_ - glo_ + 1) + std::size_t(j - glo_);
}

PiRoof::PiRoof(PiWindow src, PiWindow dst, BicofinalMap phi, int grid_lo, int grid_hi,
               std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), phi_(std::move(phi)), glo_(grid_lo),
      ghi_(grid_hi), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("PiRoof", "field mismatch");
  if (!is_bicofinal(phi_)) fail("PiRoof", "reindexing is not bicofinal");
  if (glo_ > src_.lo() || ghi_ < src_.hi()) fail("PiRoof", "grid must cover the source window");
  if (phi_.eval(glo_) > dst_.lo() || phi_.eval(ghi_) < dst_.hi()) {
    fail("PiRoof", "grid does not reach target stabilization");
  }
  std::size_t n = std::size_t(ghi_ - glo_ + 1);
  if (comps_.size() != n * n) fail("PiRoof", "component storage size mismatch");
  for (int i = glo_; i <= ghi_; ++i) {
    for (int j = i; j <= ghi_; ++j) {
      const Mat& f = comps_[idx(i, j)];
      if (f.cols() != src_.dim_clamped(i, j) ||
          f.rows() != dst_.dim_clamped(phi_.eval(i), phi_.eval(j))) {
        fail("PiRoof", "component at " + cell(i, j) + " has wrong shape");
      }
      if (i + 1 <= j) {
        Mat lhs = comps_[idx(i + 1, j)] * src_.transport(i, j, i + 1, j);
        Mat rhs = dst_.transport(phi_.eval(i), phi_.eval(j), phi_.eval(i + 1), phi_.eval(j)) * f;
        if (lhs != rhs) fail("PiRoof", "naturality fails at epi " + cell(i, j));
      }
      if (j + 1 <= ghi_) {
        Mat lhs = comps_[idx(i, j + 1)] * src_.transport(i, j, i, j + 1);
        Mat rhs = dst_.transport(phi_.eval(i), phi_.eval(j), phi_.eval(i), phi_.eval(j + 1)) * f;
        if (lhs != rhs) fail("PiRoof", "naturality fails at mono " + cell(i, j));
      }
    }
  }
}

PiRoof PiRoof::reindexing(const PiWindow& x, const BicofinalMap& phi) {
  for (int i = std::min(x.lo(), phi.lo()) - 1; i <= std::max(x.hi(), phi.hi()) + 1; ++i) {
    if (phi.eval(i) < i) fail("PiRoof::reindexing", "requires id <= phi");
  }
  int glo = x.lo(), ghi = x.hi();
  while (phi.eval(glo) > x.lo()) --glo;
  std::size_t n = std::size_t(ghi - glo + 1);
  std::vector<Mat> comps(n * n, Mat(x.field(), 0, 0));
  for (int i = glo; i <= ghi; ++i) {
    for (int j = i; j <= ghi; ++j) {
      comps[std::size_t(i - glo) * n + std::size_t(j - glo)] =
          x.transport(i, j, phi.eval(i), phi.eval(j));
    }
  }
  return PiRoof(x, x, phi, glo, ghi, std::move(comps));
}

PiRoof PiRoof::from_straight(const PiMorphism& f) {
  const PiWindow& x = f.src();
  std::size_t n = std::size_t(x.span() + 1);
  std::vector<Mat> comps(n * n, Mat(x.field(), 0, 0));
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i; j <= x.hi(); ++j) {
      comps[std::size_t(i - x.lo()) * n + std::size_t(j - x.lo())] = f.component(i, j);
    }
  }
  return PiRoof(f.src(), f.dst(), BicofinalMap::identity(x.lo(), x.hi()), x.lo(), x.hi(),
                std::move(comps));
}

Mat PiRoof::component_at(int i, int j) const {
  if (i > j) fail("PiRoof::component_at", "requires i <= j");
  int ci = clamp(i, glo_, ghi_);
  int cj = clamp(j, glo_, ghi_);
  return comps_[idx(ci, cj)];
}

PiRoof compose(const PiRoof& g, const PiRoof& f) {
  if (!(f.dst() == g.src())) fail("compose", "endpoint mismatch");
  BicofinalMap chi = compose(g.phi(), f.phi());
  int glo = std::min(f.grid_lo(), f.src().lo());
  int ghi = std::max(f.grid_hi(), f.src().hi());
  while (chi.eval(glo) > g.dst().lo()) --glo;
  while (chi.eval(ghi) < g.dst().hi()) ++ghi;
  std::size_t n = std::size_t(ghi - glo + 1);
  std::vector<Mat> comps(n * n, Mat(f.src().field(), 0, 0));
  for (int i = glo; i <= ghi; ++i) {
    for (int j = i; j <= ghi; ++j) {
      comps[std::size_t(i - glo) * n + std::size_t(j - glo)] =
          g.component_at(f.phi().eval(i), f.phi().eval(j)) * f.component_at(i, j);
    }
  }
  return PiRoof(f.src(), g.dst(), std::move(chi), glo, ghi, std::move(comps));
}

bool equivalent(const PiRoof& r1, const PiRoof& r2) {
  if (!(r1.src() == r2.src()) || !(r1.dst() == r2.dst())) {
    fail("equivalent", "endpoint mismatch");
  }
  const PiWindow& dst = r1.dst();
  int glo = std::min(r1.grid_lo(), r2.grid_lo());
  int ghi = std::max(r1.grid_hi(), r2.grid_hi());
  for (int i = glo; i <= ghi; ++i) {
    for (int j = i; j <= ghi; ++j) {
      int a1 = r1.phi().eval(i), b1 = r1.phi().eval(j);
      int a2 = r2.phi().eval(i), b2 = r2.phi().eval(j);
      int ti = std::max(a1, a2), tj = std::max(b1, b2);
      Mat lhs = dst.transport(a1, b1, ti, tj) * r1.component_at(i, j);
      Mat rhs = dst.transport(a2, b2, ti, tj) * r2.component_at(i, j);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// Canonical quotient X_j / X_i for a strict chain: the echelon-complement
// cokernel of the transport.
Mat chain_quotient(const IndWindow& x, int i, int j) { return cokernel(x.transport(i, j)); }

}  // namespace

PiWindow embed_ind_window(const IndWindow& x) {
  for (int t = 0; t < x.top(); ++t) {
    if (!is_injective(x.map_at(t))) {
      fail("embed_ind_window", "window is not strict (map " + std::to_string(t) +
                                   " not injective)");
    }
  }
  int n = x.top();
  PiWindowBuilder b(x.field(), -1, n);
  for (int j = 0; j <= n; ++j) b.set_dim(-1, j, x.dim_at(j));
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) b.set_dim(i, j, x.dim_at(j) - x.dim_at(i));
  }
  // Row -1 carries the chain itself.
  if (n >= 1) {
    for (int j = 0; j < n; ++j) b.set_mono(-1, j, x.map_at(j));
  }
  b.set_mono(-1, -1, Mat(x.field(), x.dim_at(0), 0));
  for (int j = 0; j <= n; ++j) b.set_epi(-1, j, chain_quotient(x, 0, j));
  // Quotient grid.
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Mat qij = chain_quotient(x, i, j);
      if (j + 1 <= n) {
        Mat qij1 = chain_quotient(x, i, j + 1);
        b.set_mono(i, j, qij1 * x.map_at(j) * right_inverse(qij));
      }
      if (i + 1 <= j) {
        Mat qi1j = chain_quotient(x, i + 1, j);
        b.set_epi(i, j, qi1j * right_inverse(qij));
      }
    }
  }
  return b.build();
}

PiWindow direct_sum(const PiWindow& a, const PiWindow& b) {
  if (a.field() != b.field()) fail("direct_sum", "field mismatch");
  if (a.lo() != b.lo() || a.hi() != b.hi()) fail("direct_sum", "bounds mismatch");
  PiWindowBuilder out(a.field(), a.lo(), a.hi());
  for (int i = a.lo(); i <= a.hi(); ++i) {
    for (int j = i; j <= a.hi(); ++j) {
      out.set_dim(i, j, a.dim(i, j) + b.dim(i, j));
      if (i + 1 <= j) out.set_epi(i, j, direct_sum(a.epi(i, j), b.epi(i, j)));
      if (j + 1 <= a.hi()) out.set_mono(i, j, direct_sum(a.mono(i, j), b.mono(i, j)));
    }
  }
  return out.build();
}

PiWindow embed_pro_window(const ProWindow& y) {
  for (int t = 0; t < y.top(); ++t) {
    if (!is_surjective(y.map_at(t))) {
      fail("embed_pro_window", "window is not strict (map " + std::to_string(t) +
                                   " not surjective)");
    }
  }
  // Mirror of the inductive embedding through duality.
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int t = 0; t <= y.top(); ++t) dims.push_back(y.dim_at(t));
  for (int t = 0; t < y.top(); ++t) maps.push_back(transpose(y.map_at(t)));
  IndWindow dual_chain(y.field(), std::move(dims), std::move(maps));
  return dualize(embed_ind_window(dual_chain));
}

}  // namespace indpro
