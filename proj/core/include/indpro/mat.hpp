#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "indpro/field.hpp"

namespace indpro {

// Linear map between based finite-dimensional spaces over GF(p), stored
// row-major. Matrices act on column vectors; composition is left
// multiplication, so g*f applies f first.
class Mat {
 public:
  Mat(PrimeField field, int rows, int cols);
  Mat(PrimeField field, int rows, int cols, std::vector<std::uint32_t> entries);

  static Mat identity(PrimeField field, int n);
  static Mat zero(PrimeField field, int rows, int cols) { return Mat(field, rows, cols); }
  static Mat from_rows(PrimeField field,
                       std::initializer_list<std::initializer_list<long long>> rows);

  PrimeField field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, std::uint32_t v) { e_[std::size_t(r) * cols_ + c] = v % field_.modulus(); }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> e_;
};

Mat operator*(const Mat& g, const Mat& f);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat negate(const Mat& a);
Mat transpose(const Mat& a);
Mat scale(const Mat& a, std::uint32_t c);

// [a | b] and [a ; b].
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
// Block diagonal a (+) b.
Mat direct_sum(const Mat& a, const Mat& b);

void require_same_field(const Mat& a, const Mat& b, const char* where);

}  // namespace indpro
