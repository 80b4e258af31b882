#pragma once

#include <vector>

namespace indpro {

// Monotone index reparametrization of Z+ stored as a finite window; beyond
// the window the map continues with slope 1, so it always tends to infinity.
// The representation is canonical: trailing values already predicted by the
// tail rule are trimmed, making equality structural.
class CofinalMap {
 public:
  explicit CofinalMap(std::vector<int> window_values);

  static CofinalMap identity(int length = 1);
  static CofinalMap constant_then_tail(int value, int length);
  static CofinalMap shift(int offset, int length = 1);

  int eval(int n) const;
  int operator()(int n) const { return eval(n); }
  int window_len() const { return int(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  friend bool operator==(const CofinalMap& a, const CofinalMap& b) { return a.w_ == b.w_; }
  friend bool operator!=(const CofinalMap& a, const CofinalMap& b) { return !(a == b); }

 private:
  std::vector<int> w_;
};

// True iff the stored window is nondecreasing; the slope-1 tail rescues
// cofinality past the window automatically.
bool is_cofinal(const CofinalMap& m);
bool dominates_identity(const CofinalMap& m);  // id <= m pointwise
bool below_identity(const CofinalMap& m);      // m <= id pointwise

CofinalMap compose(const CofinalMap& outer, const CofinalMap& inner);
bool leq(const CofinalMap& a, const CofinalMap& b);

// The monotone right adjoint of m on [0, up_to]: j maps to the largest i with
// m(i) <= j, and to 0 when no window index qualifies. Requires id <= m, which
// forces the result below the identity.
CofinalMap floor_inverse(const CofinalMap& m, int up_to);

struct PiPoint {
  int i;
  int j;
  PiPoint(int i_, int j_);
  friend bool operator==(PiPoint a, PiPoint b) { return a.i == b.i && a.j == b.j; }
};

// Monotone reparametrization of Z with slope-1 tails on both sides, stored on
// [lo(), hi()]. Canonical trimming applies at both ends.
class BicofinalMap {
 public:
  BicofinalMap(int lo, std::vector<int> window_values);

  static BicofinalMap identity(int lo = 0, int hi = 0);
  static BicofinalMap shift(int offset, int lo = 0, int hi = 0);

  int eval(int n) const;
  int operator()(int n) const { return eval(n); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + int(w_.size()) - 1; }
  const std::vector<int>& window() const { return w_; }

  // Coordinatewise action on Pi; preserves i <= j when nondecreasing.
  PiPoint map_pair(PiPoint p) const;

  friend bool operator==(const BicofinalMap& a, const BicofinalMap& b) {
    return a.lo_ == b.lo_ && a.w_ == b.w_;
  }
  friend bool operator!=(const BicofinalMap& a, const BicofinalMap& b) { return !(a == b); }

 private:
  int lo_;
  std::vector<int> w_;
};

bool is_bicofinal(const BicofinalMap& m);
BicofinalMap compose(const BicofinalMap& outer, const BicofinalMap& inner);
bool leq(const BicofinalMap& a, const BicofinalMap& b);
BicofinalMap pointwise_max(const BicofinalMap& a, const BicofinalMap& b);

}  // namespace indpro
