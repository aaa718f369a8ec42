#pragma once
// Slow reference computations used only by the tests. Nothing here calls
// into the library's elimination or Smith code.

#include <cstdint>
#include <random>
#include <vector>

#include "lpa/int_matrix.hpp"

namespace oracle {

using lpa::Integer;
using lpa::IntMatrix;

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Smith diagonal from determinantal divisors: D_k = gcd of all k x k minors,
// alpha_k = D_k / D_(k-1), with alpha_k = 0 once D_k = 0.
inline std::vector<Integer> smith_diagonal_by_minors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rows);
    subsets(m.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = lpa::gcd(g, cofactor_det(sub));
      }
    if (g == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(Integer(g / prev));
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace oracle
