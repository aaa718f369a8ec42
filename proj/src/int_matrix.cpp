#include "lpa/int_matrix.hpp"

#include <utility>

namespace lpa {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long x : row) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("IntMatrix difference: dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Integer det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  Integer prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = a(i, k) == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        // Zero times anything plus a zero lead stays zero.
        if (lead_zero && a(i, j) == 0) continue;
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

}  // namespace lpa
