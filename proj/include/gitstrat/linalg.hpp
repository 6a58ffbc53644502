#pragma once

// Dense rational vectors and matrices, and exact reduced row echelon form.

#include "gitstrat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gitstrat {

/// Fixed-length vector of rationals.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : entries_(n) {}
  RatVector(std::initializer_list<Rational> init) : entries_(init) {}
  explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Rational> entries() const { return entries_; }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (!x.is_zero()) return false;
    return true;
  }

  RatVector& operator+=(const RatVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  RatVector& operator-=(const RatVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  RatVector& operator*=(const Rational& s) {
    for (auto& x : entries_) x *= s;
    return *this;
  }
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector v) { return v *= s; }

  friend bool operator==(const RatVector&, const RatVector&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += entries_[i].str();
    }
    return out + ")";
  }

 private:
  void check_same(const RatVector& o) const {
    if (o.size() != size()) throw std::invalid_argument("vector length mismatch");
  }
  std::vector<Rational> entries_;
};

inline Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: vector length mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

/// Row-major rectangular matrix with immutable dimensions.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const {
    return RatVector(std::vector<Rational>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
  }
  RatVector col(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first row (at or below the current pivot row) with a nonzero
/// entry; exact arithmetic needs no magnitude pivoting.
inline RatMatrix rref(RatMatrix m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("rref of empty matrix");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(pivot_row, k));
    const Rational inv = Rational(1) / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= factor * m(pivot_row, k);
    }
    ++pivot_row;
  }
  return m;
}

}  // namespace gitstrat
