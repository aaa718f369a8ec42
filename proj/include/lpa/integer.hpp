#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lpa {

using Integer = mpz_class;

/// Raised when an argument lies outside an operation's domain
/// (n = 0 for a graph family, non-square determinant, malformed element...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace lpa
