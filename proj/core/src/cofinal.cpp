#include "indpro/cofinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace indpro {

namespace {

void trim_tail(std::vector<int>& w) {
  while (w.size() >= 2 && w.back() == w[w.size() - 2] + 1) w.pop_back();
}

void require_cofinal(const CofinalMap& m, const char* where) {
  if (!is_cofinal(m)) throw std::invalid_argument(std::string(where) + ": map is not cofinal");
}

}  // namespace

CofinalMap::CofinalMap(std::vector<int> window_values) : w_(std::move(window_values)) {
  if (w_.empty()) throw std::invalid_argument("CofinalMap: empty window");
  for (int v : w_) {
    if (v < 0) throw std::invalid_argument("CofinalMap: negative value outside Z+");
  }
  trim_tail(w_);
}

CofinalMap CofinalMap::identity(int length) {
  std::vector<int> w(std::size_t(std::max(length, 1)));
  for (int i = 0; i < int(w.size()); ++i) w[std::size_t(i)] = i;
  return CofinalMap(std::move(w));
}

CofinalMap CofinalMap::constant_then_tail(int value, int length) {
  std::vector<int> w(std::size_t(std::max(length, 1)), value);
  return CofinalMap(std::move(w));
}

CofinalMap CofinalMap::shift(int offset, int length) {
  std::vector<int> w(std::size_t(std::max(length, 1)));
  for (int i = 0; i < int(w.size()); ++i) w[std::size_t(i)] = i + offset;
  return CofinalMap(std::move(w));
}

int CofinalMap::eval(int n) const {
  if (n < 0) throw std::out_of_range("CofinalMap::eval: negative index");
  int last = int(w_.size()) - 1;
  return n <= last ? w_[std::size_t(n)] : w_[std::size_t(last)] + (n - last);
}

bool is_cofinal(const CofinalMap& m) {
  const auto& w = m.window();
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) return false;
  }
  return true;
}

bool dominates_identity(const CofinalMap& m) {
  for (int i = 0; i < m.window_len(); ++i) {
    if (m.eval(i) < i) return false;
  }
  return true;  // tail preserves the offset
}

bool below_identity(const CofinalMap& m) {
  for (int i = 0; i < m.window_len(); ++i) {
    if (m.eval(i) > i) return false;
  }
  return true;
}

CofinalMap compose(const CofinalMap& outer, const CofinalMap& inner) {
  require_cofinal(outer, "compose");
  require_cofinal(inner, "compose");
  // Beyond this index both factors run on their slope-1 tails, so the
  // composite does too.
  int n_inner = inner.window_len() - 1;
  int n_outer = outer.window_len() - 1;
  int bound = n_inner;
  if (inner.eval(bound) < n_outer) bound += n_outer - inner.eval(bound);
  std::vector<int> w(std::size_t(bound + 1));
  for (int i = 0; i <= bound; ++i) w[std::size_t(i)] = outer.eval(inner.eval(i));
  return CofinalMap(std::move(w));
}

bool leq(const CofinalMap& a, const CofinalMap& b) {
  require_cofinal(a, "leq");
  require_cofinal(b, "leq");
  int bound = std::max(a.window_len(), b.window_len());
  for (int i = 0; i <= bound; ++i) {
    if (a.eval(i) > b.eval(i)) return false;
  }
  return true;  // both tails have slope 1, the gap at `bound` persists
}

CofinalMap floor_inverse(const CofinalMap& m, int up_to) {
  require_cofinal(m, "floor_inverse");
  if (!dominates_identity(m)) {
    throw std::invalid_argument("floor_inverse: requires id <= map");
  }
  if (up_to < 0) throw std::invalid_argument("floor_inverse: negative bound");
  std::vector<int> w(std::size_t(up_to + 1), 0);
  for (int j = 0; j <= up_to; ++j) {
    // Largest i with m(i) <= j; since id <= m, only i <= j can qualify.
    int best = -1;
    for (int i = 0; i <= j; ++i) {
      if (m.eval(i) <= j) best = i;
    }
    w[std::size_t(j)] = best < 0 ? 0 : best;
  }
  return CofinalMap(std::move(w));
}

PiPoint::PiPoint(int i_, int j_) : i(i_), j(j_) {
  if (i > j) throw std::invalid_argument("PiPoint: requires i <= j");
}

BicofinalMap::BicofinalMap(int lo, std::vector<int> window_values)
    : lo_(lo), w_(std::move(window_values)) {
  if (w_.empty()) throw std::invalid_argument("BicofinalMap: empty window");
  // Trim both ends where the slope-1 tails already predict the value. A
  // fully affine map is pinned at position 0 so equal maps compare equal.
  while (w_.size() >= 2 && w_[1] == w_[0] + 1) {
    w_.erase(w_.begin());
    ++lo_;
  }
  trim_tail(w_);
  if (w_.size() == 1) {
    w_[0] -= lo_;
    lo_ = 0;
  }
}

BicofinalMap BicofinalMap::identity(int lo, int hi) {
  std::vector<int> w;
  for (int i = lo; i <= std::max(lo, hi); ++i) w.push_back(i);
  return BicofinalMap(lo, std::move(w));
}

BicofinalMap BicofinalMap::shift(int offset, int lo, int hi) {
  std::vector<int> w;
  for (int i = lo; i <= std::max(lo, hi); ++i) w.push_back(i + offset);
  return BicofinalMap(lo, std::move(w));
}

int BicofinalMap::eval(int n) const {
  if (n < lo_) return w_.front() - (lo_ - n);
  int h = hi();
  if (n > h) return w_.back() + (n - h);
  return w_[std::size_t(n - lo_)];
}

PiPoint BicofinalMap::map_pair(PiPoint p) const { return PiPoint(eval(p.i), eval(p.j)); }

bool is_bicofinal(const BicofinalMap& m) {
  const auto& w = m.window();
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) return false;
  }
  return true;
}

namespace {
void require_bicofinal(const BicofinalMap& m, const char* where) {
  if (!is_bicofinal(m)) throw std::invalid_argument(std::string(where) + ": map is not bicofinal");
}
}  // namespace

BicofinalMap compose(const BicofinalMap& outer, const BicofinalMap& inner) {
  require_bicofinal(outer, "compose");
  require_bicofinal(inner, "compose");
  int lo = inner.lo();
  int hi = inner.hi();
  // Push the bounds out until the inner values land on the outer tails.
  if (inner.eval(lo) > outer.lo()) lo -= inner.eval(lo) - outer.lo();
  if (inner.eval(hi) < outer.hi()) hi += outer.hi() - inner.eval(hi);
  std::vector<int> w;
  for (int i = lo; i <= hi; ++i) w.push_back(outer.eval(inner.eval(i)));
  return BicofinalMap(lo, std::move(w));
}

bool leq(const BicofinalMap& a, const BicofinalMap& b) {
  require_bicofinal(a, "leq");
  require_bicofinal(b, "leq");
  int lo = std::min(a.lo(), b.lo()) - 1;
  int hi = std::max(a.hi(), b.hi()) + 1;
  for (int i = lo; i <= hi; ++i) {
    if (a.eval(i) > b.eval(i)) return false;
  }
  return true;
}

BicofinalMap pointwise_max(const BicofinalMap& a, const BicofinalMap& b) {
  int lo = std::min(a.lo(), b.lo()) - 1;
  int hi = std::max(a.hi(), b.hi()) + 1;
  std::vector<int> w;
  for (int i = lo; i <= hi; ++i) w.push_back(std::max(a.eval(i), b.eval(i)));
  return BicofinalMap(lo, std::move(w));
}

}  // namespace indpro
