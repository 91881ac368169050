#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilcommute/prime_field.hpp"

namespace nilcommute {

/// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix identity(PrimeField field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static FieldMatrix random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng) {
    FieldMatrix m(field, rows, cols);
    for (auto& x : m.data_) x = field.random(rng);
    return m;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y) {
    if (!(x.field_ == y.field_) || x.cols_ != y.rows_)
      throw std::invalid_argument("FieldMatrix: incompatible product");
    const auto& F = x.field_;
    FieldMatrix out(F, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Scalar a = x(i, k);
        if (!a) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(a, y(k, j)));
      }
    return out;
  }

  friend FieldMatrix operator+(const FieldMatrix& x, const FieldMatrix& y) {
    if (!(x.field_ == y.field_) || x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("FieldMatrix: incompatible sum");
    FieldMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = x.field_.add(x.data_[i], y.data_[i]);
    return out;
  }

  friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  /// Rank by Gaussian elimination.
  std::size_t rank() const {
    FieldMatrix w = *this;
    const auto& F = field_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && w(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r)
        for (std::size_t j = c; j < cols_; ++j) std::swap(w(piv, j), w(r, j));
      const Scalar inv = F.inv(w(r, c));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const Scalar factor = F.mul(w(i, c), inv);
        if (!factor) continue;
        for (std::size_t j = c; j < cols_; ++j) w(i, j) = F.sub(w(i, j), F.mul(factor, w(r, j)));
      }
      ++r;
    }
    return r;
  }

  std::size_t corank() const { return cols_ - rank(); }

  std::vector<std::vector<Scalar>> to_rows() const {
    std::vector<std::vector<Scalar>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace nilcommute
