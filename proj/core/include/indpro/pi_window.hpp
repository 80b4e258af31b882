#pragma once

#include <array>
#include <optional>
#include <vector>

#include "indpro/cofinal.hpp"
#include "indpro/linalg.hpp"
#include "indpro/windows.hpp"

namespace indpro {

// Bifunctor on the preorder {(i,j) : i <= j} truncated to lo <= i <= j <= hi,
// with epis X(i,j) -> X(i+1,j) in the pro direction and monos
// X(i,j) -> X(i,j+1) in the ind direction. Diagonal cells are forced to
// dimension zero and all elementary squares must commute; those are the
// structural invariants. Exactness of the triples is a separate predicate.
//
// The stored window denotes the bifunctor that is constant below lo in the
// pro direction and constant above hi in the ind direction; the clamped
// accessors answer queries anywhere on the preorder.
class PiWindow {
 public:
  PiWindow(PrimeField field, int lo, int hi, std::vector<int> dims, std::vector<Mat> epis,
           std::vector<Mat> monos);

  PrimeField field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int span() const { return hi_ - lo_; }

  // Stored accessors; indices must lie in the window.
  int dim(int i, int j) const;
  const Mat& epi(int i, int j) const;   // X(i,j) -> X(i+1,j), needs i < j
  const Mat& mono(int i, int j) const;  // X(i,j) -> X(i,j+1), needs j < hi

  // Clamped denotation, defined for every i <= j.
  int dim_clamped(int i, int j) const;
  // Composite map T(i,j) -> T(i2,j2) for i <= i2, j <= j2.
  Mat transport(int i, int j, int i2, int j2) const;

  friend bool operator==(const PiWindow& x, const PiWindow& y);

 private:
  std::size_t idx(int i, int j) const;
  PrimeField field_;
  int lo_, hi_;
  std::vector<int> dims_;
  std::vector<Mat> epis_;
  std::vector<Mat> monos_;
};

// Incremental construction; build() validates the structural invariants.
class PiWindowBuilder {
 public:
  PiWindowBuilder(PrimeField field, int lo, int hi);
  void set_dim(int i, int j, int d);
  void set_epi(int i, int j, Mat m);
  void set_mono(int i, int j, Mat m);
  PiWindow build() const;

 private:
  PrimeField field_;
  int lo_, hi_;
  std::vector<std::optional<int>> dims_;
  std::vector<std::optional<Mat>> epis_;
  std::vector<std::optional<Mat>> monos_;
  std::size_t idx(int i, int j) const;
};

struct AdmissibleReport {
  bool ok;
  std::optional<std::array<int, 3>> failing_triple;
};

// Every triple i <= j <= k must give a short exact sequence
// X(i,j) -> X(i,k) -> X(j,k). Reports the lexicographically first failure.
AdmissibleReport is_admissible(const PiWindow& x);

struct KatoReport {
  bool ok;
  std::optional<std::array<int, 2>> failing_square;  // (i,j) corner
};

// All structure maps admissible and every elementary square cartesian and
// cocartesian.
KatoReport is_kato(const PiWindow& x);

// For every i <= i' <= j <= j' the square yields an exact sequence
// X(i,j) -> X(i,j') (+) X(i',j) -> X(i',j'); specializing i' = j recovers the
// admissibility triples. Requires is_kato.
bool square_ses_roundtrip(const PiWindow& x);

// Total extension of the bifunctor to the full grid: zero below the diagonal.
class FullGridView {
 public:
  explicit FullGridView(const PiWindow& x) : w_(&x) {}
  int dim(int i, int j) const;
  // Map for i <= i2, j <= j2 on the extended grid.
  Mat map(int i, int j, int i2, int j2) const;

 private:
  const PiWindow* w_;
};

// Reindexing along the pair action of a bicofinal map; out_lo/out_hi give the
// stored bounds of the result. Refuses maps that leave the stored window.
PiWindow reindex(const PiWindow& x, const BicofinalMap& phi, int out_lo, int out_hi);

// Materializes the clamped denotation on the given bounds.
PiWindow restrict_or_extend(const PiWindow& x, int out_lo, int out_hi);

// X*(i,j) is the dual of X(-j,-i); monos and epis are the transposes of the
// original epis and monos, and the double dual is the identity on matrices.
PiWindow dualize(const PiWindow& x);

// Levelwise morphism of two windows with equal bounds.
class PiMorphism {
 public:
  PiMorphism(PiWindow src, PiWindow dst, std::vector<Mat> comps);

  static PiMorphism identity(const PiWindow& x);

  const PiWindow& src() const { return src_; }
  const PiWindow& dst() const { return dst_; }
  const Mat& component(int i, int j) const;

 private:
  PiWindow src_;
  PiWindow dst_;
  std::vector<Mat> comps_;
  std::size_t idx(int i, int j) const;
};

struct PiSes {
  PiMorphism mono;  // X -> Y
  PiMorphism epi;   // Y -> Z
};

// Componentwise short exactness at every cell.
bool is_pi_ses(const PiSes& s);

// Localized morphism between Pi-windows: components f(i,j) into the
// phi-translated cells, stored on a grid wide enough that both tails have
// stabilized.
class PiRoof {
 public:
  PiRoof(PiWindow src, PiWindow dst, BicofinalMap phi, int grid_lo, int grid_hi,
         std::vector<Mat> comps);

  static PiRoof reindexing(const PiWindow& x, const BicofinalMap& phi);
  static PiRoof from_straight(const PiMorphism& f);

  const PiWindow& src() const { return src_; }
  const PiWindow& dst() const { return dst_; }
  const BicofinalMap& phi() const { return phi_; }
  int grid_lo() const { return glo_; }
  int grid_hi() const { return ghi_; }
  // Component at any cell of the preorder, by clamping into the grid.
  Mat component_at(int i, int j) const;

  friend bool operator==(const PiRoof& a, const PiRoof& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.phi_ == b.phi_ && a.glo_ == b.glo_ &&
           a.ghi_ == b.ghi_ && a.comps_ == b.comps_;
  }

 private:
  PiWindow src_;
  PiWindow dst_;
  BicofinalMap phi_;
  int glo_, ghi_;
  std::vector<Mat> comps_;
  std::size_t idx(int i, int j) const;
};

PiRoof compose(const PiRoof& g, const PiRoof& f);
// Agreement of components pushed along the pointwise maximum of the two
// reindexings, over the union grid; decidable because both tails stabilize.
bool equivalent(const PiRoof& r1, const PiRoof& r2);

// Embedding of a strict inductive window as a Pi-window on [-1, top]: row -1
// holds the spaces themselves, cell (i,j) the canonical quotient X_j / X_i.
PiWindow embed_ind_window(const IndWindow& x);
// Mirror for strict projective windows, on [-top, 1].
PiWindow embed_pro_window(const ProWindow& y);

// Cellwise direct sum of two windows with equal bounds.
PiWindow direct_sum(const PiWindow& a, const PiWindow& b);

// Change of basis at every cell: iso(i,j) must be invertible of size
// dim(i,j). Structure maps conjugate accordingly.
template <typename IsoAt>
PiWindow conjugate(const PiWindow& x, IsoAt&& iso) {
  PiWindowBuilder b(x.field(), x.lo(), x.hi());
  auto inv_at = [&](int i, int j) { return inverse(iso(i, j)); };
  for (int i = x.lo(); i <= x.hi(); ++i) {
    for (int j = i; j <= x.hi(); ++j) {
      b.set_dim(i, j, x.dim(i, j));
      if (i + 1 <= j) b.set_epi(i, j, iso(i + 1, j) * x.epi(i, j) * inv_at(i, j));
      if (j + 1 <= x.hi()) b.set_mono(i, j, iso(i, j + 1) * x.mono(i, j) * inv_at(i, j));
    }
  }
  return b.build();
}

}  // namespace indpro
