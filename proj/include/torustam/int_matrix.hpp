#pragma once

#include "torustam/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace torustam {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  /// Vertically stacks blocks that share a column count.
  static IntMatrix vstack(const std::vector<IntMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix rows_range(std::size_t begin, std::size_t end) const;
  IntMatrix cols_range(std::size_t begin, std::size_t end) const;
  bool is_zero() const;

  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[i] -= q * row[j]
  void row_submul(std::size_t i, std::size_t j, const BigInt& q);
  /// col[i] -= q * col[j]
  void col_submul(std::size_t i, std::size_t j, const BigInt& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Characteristic polynomial det(x·I − m), coefficients low-to-high,
/// computed by the Faddeev–LeVerrier recurrence.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

/// Inverse of a unimodular matrix (throws DomainError otherwise).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace torustam
