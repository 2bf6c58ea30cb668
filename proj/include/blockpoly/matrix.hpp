#pragma once

#include <cstddef>
#include <vector>

#include "blockpoly/coeff.hpp"
#include "blockpoly/errors.hpp"

namespace blockpoly {

// Minimal dense row-major matrix, just enough for matrix <-> digraph
// conversion, the oracles and elimination.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, coeff_traits<R>::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size mismatch");
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = coeff_traits<R>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t order() const {
    if (!is_square()) throw DimensionError("matrix is not square");
    return rows_;
  }

  R& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a.at(i, k);
        if (coeff_traits<R>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

}  // namespace blockpoly
