#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/int_matrix.hpp"

namespace lpa {

/// Z/d_1 + ... + Z/d_k in invariant-factor form. An entry 0 stands for Z.
/// Entries are never 1; finite entries come first and form a divisibility
/// chain. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Validates the invariant-factor form; throws DomainError otherwise.
  explicit AbelianGroup(std::vector<Integer> factors);
  /// Builds the group from a Smith diagonal: drops the 1 entries.
  static AbelianGroup from_smith_diagonal(const std::vector<Integer>& d);

  const std::vector<Integer>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_finite() const;
  /// Product of the factors; nullopt for an infinite group.
  std::optional<Integer> order() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<Integer> factors_;
};

/// One coordinate per factor, reduced into [0, d_i) when d_i > 0.
struct GroupElement {
  std::vector<Integer> coords;
  bool operator==(const GroupElement&) const = default;
};

bool is_valid_element(const AbelianGroup& g, const GroupElement& x);
/// Reduces arbitrary integer coordinates into normal form.
GroupElement reduce(const AbelianGroup& g, std::vector<Integer> coords);
GroupElement zero_element(const AbelianGroup& g);
bool is_zero(const GroupElement& x);
GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement negate(const AbelianGroup& g, const GroupElement& x);
GroupElement scale(const AbelianGroup& g, const Integer& k, const GroupElement& x);

/// Least k >= 1 with k*x = 0; nullopt when x has infinite order.
std::optional<Integer> element_order(const AbelianGroup& g, const GroupElement& x);

enum class PointedIso { Yes, No, Unsupported };

/// Finite groups up to this order are decided by enumerating isomorphisms.
inline constexpr long kPointedIsoMaxOrder = 10000;

/// Does some group isomorphism g -> h carry x to y?
///
/// Decided exactly for finite groups of order <= kPointedIsoMaxOrder and
/// whenever x = y = 0; infinite groups with a nonzero point are Unsupported.
/// Throws DomainError when x is not valid for g or y for h.
PointedIso pointed_iso_exists(const AbelianGroup& g, const GroupElement& x,
                              const AbelianGroup& h, const GroupElement& y);

struct PointedK0 {
  AbelianGroup group;
  std::vector<GroupElement> vertex_images;
  GroupElement distinguished;
  std::vector<Integer> smith_diagonal;
};

/// I - A^t.
IntMatrix b_matrix(const Graph& g);

/// Coker(b) = Z^n / Im(b) with the images of the standard basis vectors and
/// their sum. b must be square.
PointedK0 cokernel_pointed(const IntMatrix& b);
PointedK0 cokernel_pointed(const Graph& g);

/// "0", "Z/3", "Z/2 x Z/2", "Z x Z", "Z/2 x Z".
std::string group_label(const AbelianGroup& g);
std::string element_label(const GroupElement& x);

}  // namespace lpa
