#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "lpa/integer.hpp"

namespace lpa {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws DomainError for non-square input.
Integer det_exact(const IntMatrix& m);

}  // namespace lpa
