#include "indpro/windows.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indpro {

namespace {

[[noreturn]] void fail(const char* where, const std::string& what) {
  throw std::invalid_argument(std::string(where) + ": " + what);
}

// Projection F^n -> coords(B) that restricts to the identity on span(B) and
// kills the standard echelon complement.
Mat echelon_projection(const Mat& basis) {
  PrimeField k = basis.field();
  int n = basis.rows();
  int r = basis.cols();
  std::vector<bool> pivot_row(std::size_t(n), false);
  for (int c = 0; c < r; ++c) {
    for (int i = 0; i < n; ++i) {
      if (basis.at(i, c) != 0) {
        pivot_row[std::size_t(i)] = true;
        break;
      }
    }
  }
  Mat full(k, n, n);
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < n; ++i) full.set(i, c, basis.at(i, c));
  int out = r;
  for (int i = 0; i < n; ++i) {
    if (!pivot_row[std::size_t(i)]) full.set(i, out++, 1);
  }
  Mat inv = inverse(full);
  Mat proj(k, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) proj.set(i, j, inv.at(i, j));
  return proj;
}

}  // namespace

IndWindow::IndWindow(PrimeField field, std::vector<int> dims, std::vector<Mat> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) fail("IndWindow", "needs at least one space");
  if (maps_.size() + 1 != dims_.size()) fail("IndWindow", "needs one map per adjacent pair");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].field() != field_) fail("IndWindow", "field mismatch in map");
    if (maps_[i].cols() != dims_[i] || maps_[i].rows() != dims_[i + 1]) {
      fail("IndWindow", "map " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int d : dims_) {
    if (d < 0) fail("IndWindow", "negative dimension");
  }
}

IndWindow IndWindow::constant(PrimeField field, int dim, int length) {
  std::vector<int> dims(std::size_t(std::max(length, 1)), dim);
  std::vector<Mat> maps(dims.size() - 1, Mat::identity(field, dim));
  return IndWindow(field, std::move(dims), std::move(maps));
}

int IndWindow::dim_at(int i) const {
  if (i < 0) throw std::out_of_range("IndWindow::dim_at: negative index");
  return dims_[std::size_t(std::min(i, top()))];
}

Mat IndWindow::map_at(int i) const {
  if (i < 0) throw std::out_of_range("IndWindow::map_at: negative index");
  if (i >= top()) return Mat::identity(field_, dims_.back());
  return maps_[std::size_t(i)];
}

Mat IndWindow::transport(int a, int b) const {
  if (a > b) throw std::invalid_argument("IndWindow::transport: requires a <= b");
  Mat m = Mat::identity(field_, dim_at(a));
  for (int i = a; i < std::min(b, top()); ++i) m = maps_[std::size_t(i)] * m;
  return m;
}

ProWindow::ProWindow(PrimeField field, std::vector<int> dims, std::vector<Mat> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) fail("ProWindow", "needs at least one space");
  if (maps_.size() + 1 != dims_.size()) fail("ProWindow", "needs one map per adjacent pair");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].field() != field_) fail("ProWindow", "field mismatch in map");
    if (maps_[i].cols() != dims_[i + 1] || maps_[i].rows() != dims_[i]) {
      fail("ProWindow", "map " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int d : dims_) {
    if (d < 0) fail("ProWindow", "negative dimension");
  }
}

ProWindow ProWindow::constant(PrimeField field, int dim, int length) {
  std::vector<int> dims(std::size_t(std::max(length, 1)), dim);
  std::vector<Mat> maps(dims.size() - 1, Mat::identity(field, dim));
  return ProWindow(field, std::move(dims), std::move(maps));
}

int ProWindow::dim_at(int i) const {
  if (i < 0) throw std::out_of_range("ProWindow::dim_at: negative index");
  return dims_[std::size_t(std::min(i, top()))];
}

Mat ProWindow::map_at(int i) const {
  if (i < 0) throw std::out_of_range("ProWindow::map_at: negative index");
  if (i >= top()) return Mat::identity(field_, dims_.back());
  return maps_[std::size_t(i)];
}

Mat ProWindow::transport(int a, int b) const {
  if (a < b) throw std::invalid_argument("ProWindow::transport: requires a >= b");
  Mat m = Mat::identity(field_, dim_at(a));
  for (int i = std::min(a, top()) - 1; i >= b; --i) m = maps_[std::size_t(i)] * m;
  return m;
}

namespace {
// Stored length needed so that phi lands past the target window top.
int reindex_length(const CofinalMap& phi, int src_top, int dst_top) {
  int n = std::max(phi.window_len() - 1, src_top);
  if (phi.eval(n) < dst_top) n += dst_top - phi.eval(n);
  return n;
}
}  // namespace

IndWindow reindex(const IndWindow& x, const CofinalMap& phi) {
  if (!is_cofinal(phi)) fail("reindex", "map is not cofinal");
  int n = reindex_length(phi, 0, x.top());
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int i = 0; i <= n; ++i) dims.push_back(x.dim_at(phi.eval(i)));
  for (int i = 0; i < n; ++i) maps.push_back(x.transport(phi.eval(i), phi.eval(i + 1)));
  return IndWindow(x.field(), std::move(dims), std::move(maps));
}

ProWindow reindex(const ProWindow& y, const CofinalMap& phi) {
  if (!is_cofinal(phi)) fail("reindex", "map is not cofinal");
  int n = reindex_length(phi, 0, y.top());
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int i = 0; i <= n; ++i) dims.push_back(y.dim_at(phi.eval(i)));
  for (int i = 0; i < n; ++i) maps.push_back(y.transport(phi.eval(i + 1), phi.eval(i)));
  return ProWindow(y.field(), std::move(dims), std::move(maps));
}

IndMorphism::IndMorphism(IndWindow src, IndWindow dst, std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("IndMorphism", "field mismatch");
  int need = std::max(src_.top(), dst_.top());
  if (int(comps_.size()) < need + 1) fail("IndMorphism", "too few components for both windows");
  for (int i = 0; i < int(comps_.size()); ++i) {
    if (comps_[std::size_t(i)].rows() != dst_.dim_at(i) ||
        comps_[std::size_t(i)].cols() != src_.dim_at(i)) {
      fail("IndMorphism", "component " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int i = 0; i + 1 < int(comps_.size()); ++i) {
    if (comps_[std::size_t(i + 1)] * src_.map_at(i) != dst_.map_at(i) * comps_[std::size_t(i)]) {
      fail("IndMorphism", "naturality fails at index " + std::to_string(i));
    }
  }
}

IndMorphism IndMorphism::identity(const IndWindow& x) {
  std::vector<Mat> comps;
  for (int i = 0; i <= x.top(); ++i) comps.push_back(Mat::identity(x.field(), x.dim_at(i)));
  return IndMorphism(x, x, std::move(comps));
}

IndMorphism IndMorphism::zero(const IndWindow& src, const IndWindow& dst) {
  std::vector<Mat> comps;
  int need = std::max(src.top(), dst.top());
  for (int i = 0; i <= need; ++i) comps.push_back(Mat(src.field(), dst.dim_at(i), src.dim_at(i)));
  return IndMorphism(src, dst, std::move(comps));
}

Mat IndMorphism::component_at(int i) const {
  return comps_[std::size_t(std::min(i, stored_top()))];
}

ProMorphism::ProMorphism(ProWindow src, ProWindow dst, std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("ProMorphism", "field mismatch");
  int need = std::max(src_.top(), dst_.top());
  if (int(comps_.size()) < need + 1) fail("ProMorphism", "too few components for both windows");
  for (int i = 0; i < int(comps_.size()); ++i) {
    if (comps_[std::size_t(i)].rows() != dst_.dim_at(i) ||
        comps_[std::size_t(i)].cols() != src_.dim_at(i)) {
      fail("ProMorphism", "component " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int i = 0; i + 1 < int(comps_.size()); ++i) {
    if (comps_[std::size_t(i)] * src_.map_at(i) != dst_.map_at(i) * comps_[std::size_t(i + 1)]) {
      fail("ProMorphism", "naturality fails at index " + std::to_string(i));
    }
  }
}

ProMorphism ProMorphism::identity(const ProWindow& y) {
  std::vector<Mat> comps;
  for (int i = 0; i <= y.top(); ++i) comps.push_back(Mat::identity(y.field(), y.dim_at(i)));
  return ProMorphism(y, y, std::move(comps));
}

Mat ProMorphism::component_at(int i) const {
  return comps_[std::size_t(std::min(i, stored_top()))];
}

IndMorphism compose(const IndMorphism& g, const IndMorphism& f) {
  if (!(f.dst() == g.src())) fail("compose", "endpoint mismatch");
  int n = std::max(f.stored_top(), g.stored_top());
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(g.component_at(i) * f.component_at(i));
  return IndMorphism(f.src(), g.dst(), std::move(comps));
}

ProMorphism compose(const ProMorphism& g, const ProMorphism& f) {
  if (!(f.dst() == g.src())) fail("compose", "endpoint mismatch");
  int n = std::max(f.stored_top(), g.stored_top());
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(g.component_at(i) * f.component_at(i));
  return ProMorphism(f.src(), g.dst(), std::move(comps));
}

bool eventually_equal(const IndMorphism& f, const IndMorphism& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
    fail("eventually_equal", "endpoint mismatch");
  }
  int m = std::max(f.stored_top(), g.stored_top());
  return f.component_at(m) == g.component_at(m);
}

bool eventually_equal(const ProMorphism& f, const ProMorphism& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
    fail("eventually_equal", "endpoint mismatch");
  }
  int m = std::max(f.stored_top(), g.stored_top());
  return f.component_at(m) == g.component_at(m);
}

IndRoof::IndRoof(IndWindow src, IndWindow dst, CofinalMap phi, std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), phi_(std::move(phi)), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("IndRoof", "field mismatch");
  if (!is_cofinal(phi_)) fail("IndRoof", "reindexing is not cofinal");
  if (int(comps_.size()) < src_.top() + 1) fail("IndRoof", "too few components for source window");
  for (int i = 0; i < int(comps_.size()); ++i) {
    if (comps_[std::size_t(i)].rows() != dst_.dim_at(phi_.eval(i)) ||
        comps_[std::size_t(i)].cols() != src_.dim_at(i)) {
      fail("IndRoof", "component " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int i = 0; i + 1 < int(comps_.size()); ++i) {
    Mat lhs = comps_[std::size_t(i + 1)] * src_.map_at(i);
    Mat rhs = dst_.transport(phi_.eval(i), phi_.eval(i + 1)) * comps_[std::size_t(i)];
    if (lhs != rhs) fail("IndRoof", "naturality fails at index " + std::to_string(i));
  }
}

IndRoof IndRoof::reindexing(const IndWindow& x, const CofinalMap& phi) {
  if (!dominates_identity(phi)) fail("IndRoof::reindexing", "requires id <= phi");
  int n = std::max(x.top(), phi.window_len() - 1);
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(x.transport(i, phi.eval(i)));
  return IndRoof(x, x, phi, std::move(comps));
}

IndRoof IndRoof::from_straight(const IndMorphism& f) {
  std::vector<Mat> comps;
  for (int i = 0; i <= f.stored_top(); ++i) comps.push_back(f.component_at(i));
  return IndRoof(f.src(), f.dst(), CofinalMap::identity(), std::move(comps));
}

Mat IndRoof::component_at(int i) const {
  int l = stored_top();
  if (i <= l) return comps_[std::size_t(i)];
  return dst_.transport(phi_.eval(l), phi_.eval(i)) * comps_[std::size_t(l)];
}

IndRoof compose(const IndRoof& g, const IndRoof& f) {
  if (!(f.dst() == g.src())) fail("compose", "endpoint mismatch");
  CofinalMap chi = compose(g.phi(), f.phi());
  int n = std::max(f.stored_top(), f.src().top());
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) {
    comps.push_back(g.component_at(f.phi().eval(i)) * f.component_at(i));
  }
  return IndRoof(f.src(), g.dst(), std::move(chi), std::move(comps));
}

IndRoof push_into(const IndRoof& r, const CofinalMap& psi) {
  if (!leq(r.phi(), psi)) fail("push_into", "requires phi <= psi");
  std::vector<Mat> comps;
  for (int i = 0; i <= r.stored_top(); ++i) {
    comps.push_back(r.dst().transport(r.phi().eval(i), psi.eval(i)) * r.component_at(i));
  }
  return IndRoof(r.src(), r.dst(), psi, std::move(comps));
}

bool equivalent(const IndRoof& r1, const IndRoof& r2) {
  if (!(r1.src() == r2.src()) || !(r1.dst() == r2.dst())) {
    fail("equivalent", "endpoint mismatch");
  }
  const IndWindow& dst = r1.dst();
  int b = std::max({r1.stored_top(), r2.stored_top(), r1.src().top()});
  while (std::min(r1.phi().eval(b), r2.phi().eval(b)) < dst.top()) ++b;
  for (int i = 0; i <= b; ++i) {
    int t = std::max({r1.phi().eval(i), r2.phi().eval(i), dst.top()});
    Mat lhs = dst.transport(r1.phi().eval(i), t) * r1.component_at(i);
    Mat rhs = dst.transport(r2.phi().eval(i), t) * r2.component_at(i);
    if (lhs != rhs) return false;
  }
  return true;
}

ProRoof::ProRoof(ProWindow src, ProWindow dst, CofinalMap rho, std::vector<Mat> comps)
    : src_(std::move(src)), dst_(std::move(dst)), rho_(std::move(rho)), comps_(std::move(comps)) {
  if (src_.field() != dst_.field()) fail("ProRoof", "field mismatch");
  if (!is_cofinal(rho_)) fail("ProRoof", "reindexing is not cofinal");
  if (!below_identity(rho_)) fail("ProRoof", "requires rho <= id");
  int l = int(comps_.size()) - 1;
  if (l < src_.top()) fail("ProRoof", "too few components for source window");
  if (rho_.eval(l) < dst_.top()) fail("ProRoof", "too few components for target window");
  for (int i = 0; i <= l; ++i) {
    if (comps_[std::size_t(i)].rows() != dst_.dim_at(rho_.eval(i)) ||
        comps_[std::size_t(i)].cols() != src_.dim_at(i)) {
      fail("ProRoof", "component " + std::to_string(i) + " has wrong shape");
    }
  }
  for (int i = 0; i + 1 <= l; ++i) {
    Mat lhs = comps_[std::size_t(i)] * src_.map_at(i);
    Mat rhs = dst_.transport(rho_.eval(i + 1), rho_.eval(i)) * comps_[std::size_t(i + 1)];
    if (lhs != rhs) fail("ProRoof", "naturality fails at index " + std::to_string(i));
  }
}

ProRoof ProRoof::reindexing(const ProWindow& y, const CofinalMap& rho) {
  if (!below_identity(rho)) fail("ProRoof::reindexing", "requires rho <= id");
  int n = std::max(y.top(), rho.window_len() - 1);
  if (rho.eval(n) < y.top()) n += y.top() - rho.eval(n);
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(y.transport(i, rho.eval(i)));
  return ProRoof(y, y, rho, std::move(comps));
}

ProRoof ProRoof::from_straight(const ProMorphism& f) {
  std::vector<Mat> comps;
  int n = std::max({f.stored_top(), f.src().top(), f.dst().top()});
  for (int i = 0; i <= n; ++i) comps.push_back(f.component_at(i));
  return ProRoof(f.src(), f.dst(), CofinalMap::identity(), std::move(comps));
}

Mat ProRoof::component_at(int i) const {
  int l = stored_top();
  if (i <= l) return comps_[std::size_t(i)];
  return comps_[std::size_t(l)];  // constant past the stabilized window
}

ProRoof compose(const ProRoof& g, const ProRoof& f) {
  if (!(f.dst() == g.src())) fail("compose", "endpoint mismatch");
  CofinalMap chi = compose(g.rho(), f.rho());
  int n = std::max(f.stored_top(), f.src().top());
  while (chi.eval(n) < g.dst().top()) ++n;
  std::vector<Mat> comps;
  for (int i = 0; i <= n; ++i) {
    comps.push_back(g.component_at(f.rho().eval(i)) * f.component_at(i));
  }
  return ProRoof(f.src(), g.dst(), std::move(chi), std::move(comps));
}

bool equivalent(const ProRoof& r1, const ProRoof& r2) {
  if (!(r1.src() == r2.src()) || !(r1.dst() == r2.dst())) {
    fail("equivalent", "endpoint mismatch");
  }
  const ProWindow& dst = r1.dst();
  int b = std::max({r1.stored_top(), r2.stored_top(), r1.src().top()});
  while (std::min(r1.rho().eval(b), r2.rho().eval(b)) < dst.top()) ++b;
  // Deep-end equality: past b every map involved is an identity.
  if (r1.component_at(b) != r2.component_at(b)) return false;
  // Shallow equality after pushing down to the window floor.
  for (int i = 0; i <= b; ++i) {
    Mat lhs = dst.transport(r1.rho().eval(i), 0) * r1.component_at(i);
    Mat rhs = dst.transport(r2.rho().eval(i), 0) * r2.component_at(i);
    if (lhs != rhs) return false;
  }
  return true;
}

Realization realize_ind(const IndWindow& x) {
  Realization r;
  r.space_dim = x.dim_at(x.top());
  for (int i = 0; i <= x.top(); ++i) r.legs.push_back(x.transport(i, x.top()));
  return r;
}

Realization realize_pro(const ProWindow& y) {
  Realization r;
  r.space_dim = y.dim_at(y.top());
  for (int i = 0; i <= y.top(); ++i) r.legs.push_back(y.transport(y.top(), i));
  return r;
}

ProStrictification strictify_pro(const ProWindow& y) {
  PrimeField k = y.field();
  int n = y.top();
  std::vector<Mat> bases;
  std::vector<int> chain_steps;
  for (int t = 0; t < n; ++t) {
    Subspace w{y.dim_at(t), Mat::identity(k, y.dim_at(t))};
    int steps = 1;
    for (int i = t + 1; i <= n; ++i) {
      Subspace next = intersect(w, image(y.transport(i, t)));
      if (next.dim() < w.dim()) ++steps;
      w = next;
    }
    chain_steps.push_back(steps);
    bases.push_back(w.basis);
  }
  bases.push_back(Mat::identity(k, y.dim_at(n)));

  std::vector<int> dims;
  for (const Mat& b : bases) dims.push_back(b.cols());

  std::vector<Mat> maps;
  for (int t = 0; t < n; ++t) {
    auto m = solve(bases[std::size_t(t)], y.map_at(t) * bases[std::size_t(t + 1)]);
    if (!m) fail("strictify_pro", "image chain is not nested");
    maps.push_back(*m);
  }
  ProWindow strict(k, dims, maps);

  // Levelwise retraction: f_t . incl_t = id and incl . f is eventually id.
  std::vector<Mat> fwd_comps;
  fwd_comps.push_back(left_inverse(bases[0]));
  for (int t = 0; t < n; ++t) {
    Mat sigma = right_inverse(maps[std::size_t(t)]);
    Mat ext = echelon_projection(bases[std::size_t(t + 1)]);
    Mat correction =
        (Mat::identity(k, dims[std::size_t(t + 1)]) - sigma * maps[std::size_t(t)]) * ext;
    fwd_comps.push_back(sigma * fwd_comps.back() * y.map_at(t) + correction);
  }
  ProMorphism fwd(y, strict, std::move(fwd_comps));
  ProMorphism bwd(strict, y, bases);
  return ProStrictification{std::move(strict), std::move(fwd), std::move(bwd),
                            std::move(chain_steps)};
}

IndStrictification strictify_ind(const IndWindow& x) {
  PrimeField k = x.field();
  int n = x.top();
  std::vector<Mat> bases;
  for (int t = 0; t < n; ++t) bases.push_back(column_echelon_basis(x.transport(t, n)));
  bases.push_back(Mat::identity(k, x.dim_at(n)));

  std::vector<int> dims;
  for (const Mat& b : bases) dims.push_back(b.cols());

  std::vector<Mat> maps;
  for (int t = 0; t < n; ++t) {
    auto m = solve(bases[std::size_t(t + 1)], bases[std::size_t(t)]);
    if (!m) fail("strictify_ind", "image chain is not nested");
    maps.push_back(*m);
  }
  IndWindow strict(k, dims, maps);

  std::vector<Mat> fwd_comps;
  for (int t = 0; t <= n; ++t) {
    auto q = solve(bases[std::size_t(t)], x.transport(t, n));
    if (!q) fail("strictify_ind", "corestriction failed");
    fwd_comps.push_back(*q);
  }
  IndMorphism fwd(x, strict, fwd_comps);

  // Sections s_t of the corestrictions, natural by construction.
  std::vector<Mat> bwd_comps;
  bwd_comps.push_back(right_inverse(fwd_comps[0]));
  for (int t = 0; t < n; ++t) {
    Mat rho = left_inverse(maps[std::size_t(t)]);
    Mat inj = right_inverse(fwd_comps[std::size_t(t + 1)]);
    Mat correction =
        inj * (Mat::identity(k, dims[std::size_t(t + 1)]) - maps[std::size_t(t)] * rho);
    bwd_comps.push_back(x.map_at(t) * bwd_comps.back() * rho + correction);
  }
  IndMorphism bwd(strict, x, std::move(bwd_comps));
  return IndStrictification{std::move(strict), std::move(fwd), std::move(bwd)};
}

}  // namespace indpro
