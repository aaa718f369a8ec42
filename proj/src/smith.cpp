#include "lpa/smith.hpp"

#include <optional>
#include <utility>

namespace lpa {

namespace {

struct Gcdext {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};

Gcdext gcdext(const Integer& a, const Integer& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Working state: d is reduced in place, u and v accumulate the row and
// column operations so that u * t * v == d holds after every step.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& t)
      : d_(t), u_(IntMatrix::identity(t.rows())), v_(IntMatrix::identity(t.cols())) {}

  SmithDecomposition run() {
    const std::size_t r = std::min(d_.rows(), d_.cols());
    for (std::size_t k = 0; k < r; ++k) {
      if (!move_smallest_to(k)) break;  // remaining block is zero
      for (;;) {
        clear_column(k);
        clear_row(k);
        if (!column_clear(k)) continue;
        auto bad = non_divisible_row(k);
        if (!bad) break;
        add_row(*bad, k);
      }
      if (d_(k, k) < 0) negate_row(k);
    }
    SmithDecomposition out;
    out.d.reserve(r);
    for (std::size_t k = 0; k < r; ++k) out.d.push_back(d_(k, k));
    out.u = std::move(u_);
    out.v = std::move(v_);
    return out;
  }

 private:
  bool move_smallest_to(std::size_t k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = k; i < d_.rows(); ++i)
      for (std::size_t j = k; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        if (!best || abs(d_(i, j)) < abs(d_(best->first, best->second))) best = {i, j};
      }
    if (!best) return false;
    d_.swap_rows(k, best->first);
    u_.swap_rows(k, best->first);
    d_.swap_cols(k, best->second);
    v_.swap_cols(k, best->second);
    return true;
  }

  // Replace rows (k, i) by the unimodular combination that puts gcd(a, b) at
  // (k, k) and 0 at (i, k).
  void clear_column(std::size_t k) {
    for (std::size_t i = k + 1; i < d_.rows(); ++i) {
      if (d_(i, k) == 0) continue;
      const Integer a = d_(k, k), b = d_(i, k);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        row_axpy(i, k, -Integer(b / a));
        continue;
      }
      auto [g, x, y] = gcdext(a, b);
      Integer p = a / g, q = b / g;
      combine_rows(k, i, x, y, -q, p);
    }
  }

  void clear_row(std::size_t k) {
    for (std::size_t j = k + 1; j < d_.cols(); ++j) {
      if (d_(k, j) == 0) continue;
      const Integer a = d_(k, k), b = d_(k, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        col_axpy(j, k, -Integer(b / a));
        continue;
      }
      auto [g, x, y] = gcdext(a, b);
      Integer p = a / g, q = b / g;
      combine_cols(k, j, x, y, -q, p);
    }
  }

  bool column_clear(std::size_t k) const {
    for (std::size_t i = k + 1; i < d_.rows(); ++i)
      if (d_(i, k) != 0) return false;
    return true;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t k) const {
    const Integer& a = d_(k, k);
    for (std::size_t i = k + 1; i < d_.rows(); ++i)
      for (std::size_t j = k + 1; j < d_.cols(); ++j)
        if (!mpz_divisible_p(d_(i, j).get_mpz_t(), a.get_mpz_t())) return i;
    return std::nullopt;
  }

  // row_dst += c * row_src, on d and u.
  void row_axpy(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += c * d_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += c * u_(src, j);
  }

  void col_axpy(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += c * d_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += c * v_(i, src);
  }

  void add_row(std::size_t src, std::size_t dst) { row_axpy(dst, src, Integer(1)); }

  void negate_row(std::size_t k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(k, j) = -d_(k, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(k, j) = -u_(k, j);
  }

  // (row_a, row_b) <- (x*row_a + y*row_b, z*row_a + w*row_b), x*w - y*z = 1.
  static void combine(Integer& ra, Integer& rb, const Integer& x, const Integer& y,
                      const Integer& z, const Integer& w) {
    Integer na = x * ra + y * rb;
    Integer nb = z * ra + w * rb;
    ra = std::move(na);
    rb = std::move(nb);
  }

  void combine_rows(std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                    const Integer& z, const Integer& w) {
    for (std::size_t j = 0; j < d_.cols(); ++j) combine(d_(a, j), d_(b, j), x, y, z, w);
    for (std::size_t j = 0; j < u_.cols(); ++j) combine(u_(a, j), u_(b, j), x, y, z, w);
  }

  void combine_cols(std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                    const Integer& z, const Integer& w) {
    for (std::size_t i = 0; i < d_.rows(); ++i) combine(d_(i, a), d_(i, b), x, y, z, w);
    for (std::size_t i = 0; i < v_.rows(); ++i) combine(v_(i, a), v_(i, b), x, y, z, w);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& t) { return SmithReducer(t).run(); }

IntMatrix diagonal_matrix(const std::vector<Integer>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t k = 0; k < d.size() && k < rows && k < cols; ++k) m(k, k) = d[k];
  return m;
}

}  // namespace lpa
