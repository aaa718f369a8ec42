#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lpa/int_matrix.hpp"

namespace lpa {

/// First row (b_1, ..., b_n) of an n x n circulant matrix; row i+1 is row i
/// shifted cyclically one place to the right.
struct CirculantRow {
  std::vector<long> b;
};

struct CirculantProduct {
  std::vector<std::complex<double>> factors;  // factor j = sum_k b_k w_j^(k-1), w_j = exp(2 pi i j / n)
  std::complex<double> product;
};

/// Eigenvalue factorization of a circulant determinant, in floating point.
/// Throws DomainError on an empty row.
CirculantProduct circulant_det_product(const CirculantRow& row);

/// The first row of m if m is circulant (and its entries fit in a long).
std::optional<CirculantRow> circulant_row(const IntMatrix& m);

/// The circulant matrix generated by row.
IntMatrix circulant_matrix(const CirculantRow& row);

}  // namespace lpa
