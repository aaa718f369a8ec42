#pragma once

#include <vector>

#include "lpa/int_matrix.hpp"

namespace lpa {

/// Smith decomposition u * t * v = diag(d) of an integer matrix t.
///
/// u is rows x rows and v is cols x cols, both unimodular. The diagonal has
/// min(rows, cols) nonnegative entries forming a divisibility chain, with
/// zeros trailing.
struct SmithDecomposition {
  std::vector<Integer> d;
  IntMatrix u;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& t);

/// rows x cols matrix with the given diagonal.
IntMatrix diagonal_matrix(const std::vector<Integer>& d, std::size_t rows, std::size_t cols);

}  // namespace lpa
