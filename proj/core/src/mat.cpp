#include "indpro/mat.hpp"

#include <stdexcept>
#include <string>

namespace indpro {

namespace {
[[noreturn]] void dim_error(const char* where, const std::string& detail) {
  throw std::invalid_argument(std::string(where) + ": " + detail);
}
}  // namespace

Mat::Mat(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) dim_error("Mat", "negative dimension");
}

Mat::Mat(PrimeField field, int rows, int cols, std::vector<std::uint32_t> entries)
    : field_(field), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) dim_error("Mat", "negative dimension");
  if (e_.size() != std::size_t(rows) * cols) dim_error("Mat", "entry count mismatch");
  for (auto& v : e_) {
    if (v >= field_.modulus()) dim_error("Mat", "entry not reduced mod p");
  }
}

Mat Mat::identity(PrimeField field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(PrimeField field,
                   std::initializer_list<std::initializer_list<long long>> rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows.begin()->size());
  Mat m(field, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) dim_error("Mat::from_rows", "ragged rows");
    int j = 0;
    for (long long v : row) m.set(i, j++, field.reduce(v));
    ++i;
  }
  return m;
}

bool Mat::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

void require_same_field(const Mat& a, const Mat& b, const char* where) {
  if (a.field() != b.field()) {
    throw std::invalid_argument(std::string(where) + ": field mismatch (p=" +
                                std::to_string(a.field().modulus()) + " vs p=" +
                                std::to_string(b.field().modulus()) + ")");
  }
}

Mat operator*(const Mat& g, const Mat& f) {
  require_same_field(g, f, "operator*");
  if (g.cols() != f.rows()) dim_error("operator*", "inner dimension mismatch");
  PrimeField k = g.field();
  Mat r(k, g.rows(), f.cols());
  const std::uint64_t p = k.modulus();
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < f.cols(); ++j) {
      std::uint64_t acc = 0;
      for (int t = 0; t < g.cols(); ++t) {
        acc = (acc + std::uint64_t(g.at(i, t)) * f.at(t, j)) % p;
      }
      r.set(i, j, std::uint32_t(acc));
    }
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b, "operator+");
  if (a.rows() != b.rows() || a.cols() != b.cols()) dim_error("operator+", "shape mismatch");
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_field(a, b, "operator-");
  if (a.rows() != b.rows() || a.cols() != b.cols()) dim_error("operator-", "shape mismatch");
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().sub(a.at(i, j), b.at(i, j)));
  return r;
}

Mat negate(const Mat& a) {
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().neg(a.at(i, j)));
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
  return r;
}

Mat scale(const Mat& a, std::uint32_t c) {
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.field().mul(a.at(i, j), c));
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) dim_error("hstack", "row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) dim_error("vstack", "column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
  return r;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  require_same_field(a, b, "direct_sum");
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return r;
}

}  // namespace indpro
