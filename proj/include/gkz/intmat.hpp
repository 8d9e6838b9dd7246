#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gkz/numeric.hpp"

namespace gkz {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& o) const;
  IntVec mul(const IntVec& v) const;
  IntMatrix cols_subset(const std::vector<std::size_t>& idx) const;

  // Exact determinant (fraction-free Gaussian elimination).
  Int det() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += c * row j, col i += c * col j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  void add_col(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Dense rational matrix, always-reduced entries.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix mul(const RatMatrix& o) const;
  RatVec mul(const RatVec& v) const;
  RatVec mul(const IntVec& v) const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Solves M x = b exactly; M square nonsingular.  Throws SingularMatrix.
RatVec solve_rational(const IntMatrix& M, const RatVec& b);
RatVec solve_rational(const RatMatrix& M, const RatVec& b);

}  // namespace gkz
