#pragma once

#include <vector>

#include "indpro/cofinal.hpp"
#include "indpro/linalg.hpp"

namespace indpro {

// Z+-indexed inductive system truncated to a finite window. The denoted
// system is constant beyond the window: dims(i) = dims(N) and every structure
// map past N is the identity.
class IndWindow {
 public:
  IndWindow(PrimeField field, std::vector<int> dims, std::vector<Mat> maps);

  static IndWindow constant(PrimeField field, int dim, int length = 1);

  PrimeField field() const { return field_; }
  int top() const { return int(dims_.size()) - 1; }  // last stored index N
  int dim_at(int i) const;
  // Structure map X_i -> X_{i+1}; identity beyond the window.
  Mat map_at(int i) const;
  // Composite X_a -> X_b for a <= b.
  Mat transport(int a, int b) const;

  friend bool operator==(const IndWindow& x, const IndWindow& y) {
    return x.field_ == y.field_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
  }

 private:
  PrimeField field_;
  std::vector<int> dims_;
  std::vector<Mat> maps_;  // maps_[i] : X_i -> X_{i+1}
};

// Projective mirror: structure maps run downward, Y_{i+1} -> Y_i.
class ProWindow {
 public:
  ProWindow(PrimeField field, std::vector<int> dims, std::vector<Mat> maps);

  static ProWindow constant(PrimeField field, int dim, int length = 1);

  PrimeField field() const { return field_; }
  int top() const { return int(dims_.size()) - 1; }
  int dim_at(int i) const;
  // Structure map Y_{i+1} -> Y_i; identity beyond the window.
  Mat map_at(int i) const;
  // Composite Y_a -> Y_b for a >= b.
  Mat transport(int a, int b) const;

  friend bool operator==(const ProWindow& x, const ProWindow& y) {
    return x.field_ == y.field_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
  }

 private:
  PrimeField field_;
  std::vector<int> dims_;
  std::vector<Mat> maps_;  // maps_[i] : Y_{i+1} -> Y_i
};

IndWindow reindex(const IndWindow& x, const CofinalMap& phi);
ProWindow reindex(const ProWindow& y, const CofinalMap& phi);

// Levelwise morphism f_i : X_i -> Y_i, stored up to a stabilization index and
// constant beyond it.
class IndMorphism {
 public:
  IndMorphism(IndWindow src, IndWindow dst, std::vector<Mat> comps);

  static IndMorphism identity(const IndWindow& x);
  static IndMorphism zero(const IndWindow& src, const IndWindow& dst);

  const IndWindow& src() const { return src_; }
  const IndWindow& dst() const { return dst_; }
  int stored_top() const { return int(comps_.size()) - 1; }
  Mat component_at(int i) const;

  friend bool operator==(const IndMorphism& f, const IndMorphism& g) {
    return f.src_ == g.src_ && f.dst_ == g.dst_ && f.comps_ == g.comps_;
  }

 private:
  IndWindow src_;
  IndWindow dst_;
  std::vector<Mat> comps_;
};

class ProMorphism {
 public:
  ProMorphism(ProWindow src, ProWindow dst, std::vector<Mat> comps);

  static ProMorphism identity(const ProWindow& y);

  const ProWindow& src() const { return src_; }
  const ProWindow& dst() const { return dst_; }
  int stored_top() const { return int(comps_.size()) - 1; }
  Mat component_at(int i) const;

 private:
  ProWindow src_;
  ProWindow dst_;
  std::vector<Mat> comps_;
};

IndMorphism compose(const IndMorphism& g, const IndMorphism& f);
ProMorphism compose(const ProMorphism& g, const ProMorphism& f);

// Equality from some index on. With identity tails this is decidable at the
// common stabilization index.
bool eventually_equal(const IndMorphism& f, const IndMorphism& g);
bool eventually_equal(const ProMorphism& f, const ProMorphism& g);

// Localized morphism X -> Y presented as components f_i : X_i -> Y_{phi(i)}
// natural over the stored window.
class IndRoof {
 public:
  IndRoof(IndWindow src, IndWindow dst, CofinalMap phi, std::vector<Mat> comps);

  // Canonical roof X -> X with components the structure transports into phi.
  static IndRoof reindexing(const IndWindow& x, const CofinalMap& phi);
  static IndRoof from_straight(const IndMorphism& f);

  const IndWindow& src() const { return src_; }
  const IndWindow& dst() const { return dst_; }
  const CofinalMap& phi() const { return phi_; }
  int stored_top() const { return int(comps_.size()) - 1; }
  Mat component_at(int i) const;

  friend bool operator==(const IndRoof& a, const IndRoof& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.phi_ == b.phi_ && a.comps_ == b.comps_;
  }

 private:
  IndWindow src_;
  IndWindow dst_;
  CofinalMap phi_;
  std::vector<Mat> comps_;
};

IndRoof compose(const IndRoof& g, const IndRoof& f);
// Pushes r's components along dst transports into the larger reindexing psi.
IndRoof push_into(const IndRoof& r, const CofinalMap& psi);
bool equivalent(const IndRoof& r1, const IndRoof& r2);

// Pro-side roof: components f_i : X_i -> Y_{rho(i)} with rho <= id, the
// window form of a roof over the mirrored index line.
class ProRoof {
 public:
  ProRoof(ProWindow src, ProWindow dst, CofinalMap rho, std::vector<Mat> comps);

  static ProRoof reindexing(const ProWindow& y, const CofinalMap& rho);
  static ProRoof from_straight(const ProMorphism& f);

  const ProWindow& src() const { return src_; }
  const ProWindow& dst() const { return dst_; }
  const CofinalMap& rho() const { return rho_; }
  int stored_top() const { return int(comps_.size()) - 1; }
  Mat component_at(int i) const;

 private:
  ProWindow src_;
  ProWindow dst_;
  CofinalMap rho_;
  std::vector<Mat> comps_;
};

ProRoof compose(const ProRoof& g, const ProRoof& f);
bool equivalent(const ProRoof& r1, const ProRoof& r2);

struct Realization {
  int space_dim;
  std::vector<Mat> legs;  // ind: X_i -> colimit; pro: limit -> Y_i
};

// With identity tails the colimit is the top space and the legs are the
// transports into it; dually for limits.
Realization realize_ind(const IndWindow& x);
Realization realize_pro(const ProWindow& y);

struct ProStrictification {
  ProWindow strict;
  ProMorphism fwd;  // Y -> strict
  ProMorphism bwd;  // strict -> Y, the levelwise inclusion
  // Number of strictly decreasing steps each stabilized-image chain took.
  std::vector<int> chain_steps;
};

// Replaces a projective window by the isomorphic strict one built from
// stabilized image intersections. fwd . bwd is the identity levelwise and
// bwd . fwd is eventually the identity.
ProStrictification strictify_pro(const ProWindow& y);

struct IndStrictification {
  IndWindow strict;
  IndMorphism fwd;  // X -> strict, levelwise corestriction
  IndMorphism bwd;  // strict -> X
};

// Dual construction: images inside the realization, inclusions as maps.
IndStrictification strictify_ind(const IndWindow& x);

}  // namespace indpro
