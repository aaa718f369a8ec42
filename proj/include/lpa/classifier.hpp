#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ktheory.hpp"

namespace lpa {

enum class DetSign { Negative, Zero, Positive };

const char* to_string(DetSign s);
DetSign sign_of(const Integer& x);

/// Sign of det(I - A^t).
DetSign det_sign(const Graph& g);

enum class KPOutcome { Isomorphic, NotIsomorphic, Unknown, NotApplicable };

const char* to_string(KPOutcome o);

struct TraceEntry {
  std::string check;
  std::string result;
};

struct KPVerdict {
  KPOutcome outcome = KPOutcome::Unknown;
  std::vector<TraceEntry> trace;
};

/// Restricted algebraic Kirchberg-Phillips decision for L_K(e) vs L_K(f).
///
/// Both graphs must give purely infinite simple algebras (otherwise
/// NotApplicable). Non-isomorphic pointed K_0 data rules isomorphism out.
/// A pointed isomorphism together with determinants of compatible sign
/// (zero is compatible with either sign) yields Isomorphic; strictly
/// opposite signs, or a pointed question the K-theory layer cannot decide,
/// yield Unknown.
KPVerdict kp_decide(const Graph& e, const Graph& f);

/// M_d(L(1,n)); d = 1 renders as L(1,n).
struct CanonicalAlgebra {
  long n = 2;
  Integer d = 1;

  std::string label() const;
  bool operator==(const CanonicalAlgebra&) const = default;
};

/// Matrix-over-Leavitt-algebra form of L_K(g) when it applies: purely
/// infinite simple, K_0 cyclic of order n-1 (trivial K_0 counts as n = 2), and
/// negative determinant.
///
/// The matrix size is gcd(c, n-1) where c is the coordinate of the unit
/// class; it is the same for every choice of generator of K_0, and 0 maps
/// to n-1.
std::optional<CanonicalAlgebra> canonical_form(const Graph& g);

enum class CayleyClassId { TrivialK0, Z3, Klein4, ZxZ };

const char* to_string(CayleyClassId c);

struct CayleyClass {
  CayleyClassId class_id;
  std::vector<int> residues;  // residues mod 6, with 0 written as 0
  std::optional<CanonicalAlgebra> canonical;
};

/// Isomorphism class of L_K(C_n), determined by n mod 6.
CayleyClass cayley_class(long n);

}  // namespace lpa
