#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "indpro/mat.hpp"

namespace indpro {

// Thrown by is_cartesian/is_cocartesian when the input square does not
// commute: that is a malformed input, not a negative answer.
struct square_commutation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Rref {
  Mat m;
  std::vector<int> pivot_cols;
  int rank;
};

// Reduced row echelon form over GF(p).
Rref rref(const Mat& a);
int rank(const Mat& a);

bool is_injective(const Mat& f);
bool is_surjective(const Mat& f);

// Subspace of F^ambient carried as a reduced column-echelon basis, so equal
// subspaces have equal basis matrices.
struct Subspace {
  int ambient;
  Mat basis;  // ambient x dim, independent columns, canonical form

  int dim() const { return basis.cols(); }
};

// Canonical basis of the column span.
Mat column_echelon_basis(const Mat& a);

Subspace kernel(const Mat& f);
Subspace image(const Mat& f);
// Surjection q with kernel(q) = image(f); codomain dimension rows - rank(f).
Mat cokernel(const Mat& f);

Subspace intersect(const Subspace& s1, const Subspace& s2);
bool subspace_eq(const Subspace& s1, const Subspace& s2);
bool subspace_contains(const Subspace& s, const Mat& vectors);

// All solutions of a*x = b: returns a particular solution, or nullopt when
// inconsistent. The solution set is particular + kernel(a).
std::optional<Mat> solve(const Mat& a, const Mat& b);
// l*a = id (a injective) / a*r = id (a surjective); throw otherwise.
Mat left_inverse(const Mat& a);
Mat right_inverse(const Mat& a);
Mat inverse(const Mat& a);

bool is_exact_at(const Mat& f, const Mat& g);

struct SesTriple {
  Mat mono;  // a' -> a
  Mat epi;   // a -> a''
  bool operator==(const SesTriple&) const = default;
};

bool is_ses(const SesTriple& t);

struct PullbackResult {
  int apex_dim;
  Mat to_b;
  Mat to_d;
};
// f : b -> c, g : d -> c.
PullbackResult pullback(const Mat& f, const Mat& g);

struct PushoutResult {
  int apex_dim;
  Mat from_b;
  Mat from_d;
};
// f : a -> b, g : a -> d.
PushoutResult pushout(const Mat& f, const Mat& g);

// Commuting square
//       a --a_to_b--> b
//       |             |
//     a_to_d        b_to_c
//       v             v
//       d --d_to_c--> c
struct CommutingSquare {
  Mat a_to_b;
  Mat a_to_d;
  Mat b_to_c;
  Mat d_to_c;
  bool operator==(const CommutingSquare&) const = default;
};

bool square_commutes(const CommutingSquare& s);
// Admissible means a_to_b, d_to_c injective and a_to_d, b_to_c surjective.
bool square_admissible(const CommutingSquare& s);
bool is_cartesian(const CommutingSquare& s);
bool is_cocartesian(const CommutingSquare& s);

// Mediating map for a cone (u : x -> b, v : x -> d) over the pullback of
// (f, g); nullopt when the cone does not factor.
std::optional<Mat> pullback_mediator(const PullbackResult& p, const Mat& u, const Mat& v);
// Mediating map for a cocone (h : b -> x, k : d -> x) under the pushout.
std::optional<Mat> pushout_mediator(const PushoutResult& p, const Mat& h, const Mat& k);

}  // namespace indpro
