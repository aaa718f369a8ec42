#include "lpa/circulant.hpp"

#include <numbers>

namespace lpa {

CirculantProduct circulant_det_product(const CirculantRow& row) {
  const std::size_t n = row.b.size();
  if (n == 0) throw DomainError("circulant_det_product: empty row");
  CirculantProduct out;
  out.factors.reserve(n);
  out.product = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> f = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (row.b[k] == 0) continue;
      // Reduce the exponent mod n before scaling to keep the angle in [0, 2 pi).
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                           static_cast<double>(n);
      f += static_cast<double>(row.b[k]) * std::polar(1.0, angle);
    }
    out.factors.push_back(f);
    out.product *= f;
  }
  return out;
}

std::optional<CirculantRow> circulant_row(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  const std::size_t n = m.rows();
  CirculantRow row;
  for (std::size_t j = 0; j < n; ++j) {
    if (!m(0, j).fits_slong_p()) return std::nullopt;
    row.b.push_back(m(0, j).get_si());
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != row.b[(j + n - i) % n]) return std::nullopt;
  return row;
}

IntMatrix circulant_matrix(const CirculantRow& row) {
  const std::size_t n = row.b.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row.b[(j + n - i) % n];
  return m;
}

}  // namespace lpa
