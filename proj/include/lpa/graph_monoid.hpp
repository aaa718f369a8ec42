#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/integer.hpp"

namespace lpa {

/// v_generator ~ sum_j rhs[j] * v_j
struct MonoidRelation {
  std::size_t generator = 0;
  std::vector<unsigned> rhs;
};

struct MonoidPresentation {
  std::size_t generator_count = 0;
  std::vector<MonoidRelation> relations;
};

/// One relation per non-sink vertex, read from its adjacency row.
MonoidPresentation presentation(const Graph& g);

/// max(8, 2 * n * largest relation right-hand-side sum).
unsigned default_bound(const MonoidPresentation& p);

/// A point of N^n. Entries are coefficients of v_1..v_n.
using MonoidVector = std::vector<unsigned>;

/// Largest number of box vectors saturate() will allocate.
inline constexpr std::size_t kMaxBoxVectors = 40'000'000;

namespace detail {
struct SaturationState;
}

/// The congruence generated by a presentation, restricted to the box of
/// vectors with coordinate sum <= bound.
///
/// Classes are numbered by their representative: the member of least
/// coordinate sum, ties broken towards lexicographically larger vectors, so
/// class 0 is always {z} and v_1 precedes v_2.
class CongruenceClasses {
 public:
  CongruenceClasses(CongruenceClasses&&) noexcept;
  CongruenceClasses& operator=(CongruenceClasses&&) noexcept;
  ~CongruenceClasses();

  unsigned bound() const;
  std::size_t generator_count() const;
  std::size_t vector_count() const;
  std::size_t class_count() const;
  std::size_t nonzero_class_count() const { return class_count() - 1; }

  /// Nonzero class counts of separate saturations at bound-2, bound-1, bound.
  const std::vector<std::size_t>& nonzero_counts() const;
  /// True when the three entries of nonzero_counts() agree.
  bool stabilized() const;

  bool in_box(const MonoidVector& x) const;
  /// Throws DomainError when x lies outside the box.
  std::size_t class_of(const MonoidVector& x) const;
  bool equivalent(const MonoidVector& x, const MonoidVector& y) const;
  MonoidVector representative(std::size_t cls) const;
  std::size_t class_size(std::size_t cls) const;
  std::vector<MonoidVector> members(std::size_t cls) const;

  /// A chain from x to y in which consecutive vectors differ by one
  /// application of one relation. Intermediate vectors may leave the box.
  /// Throws DomainError if x and y are not equivalent.
  std::vector<MonoidVector> rewrite_chain(const MonoidVector& x, const MonoidVector& y) const;

  const MonoidPresentation& presentation() const;

 private:
  friend CongruenceClasses saturate(const MonoidPresentation& p, unsigned bound);
  explicit CongruenceClasses(std::unique_ptr<detail::SaturationState> state);
  std::unique_ptr<detail::SaturationState> state_;
};

/// Union-find over the box closed under single rewrites and translation.
/// Throws DomainError if bound is smaller than 1 or than some relation's
/// right-hand-side sum, or if the box is too large.
CongruenceClasses saturate(const MonoidPresentation& p, unsigned bound);

/// Addition table of the nonzero classes.
struct FiniteGroupTable {
  std::vector<std::size_t> element_class_ids;  // congruence class of each element
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = a + b
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t size() const { return element_class_ids.size(); }
  /// Element index of a nonzero congruence class; throws DomainError otherwise.
  std::size_t element_of_class(std::size_t cls) const;
  std::size_t element_order(std::size_t element) const;
};

struct NotClosed {
  std::string reason;
};

using MStarResult = std::variant<FiniteGroupTable, NotClosed>;

MStarResult mstar_group(const CongruenceClasses& c);

/// Invariant factors (no 1 entries) of a finite abelian group given by its
/// table, from the number of elements killed by each prime power.
std::vector<Integer> invariant_factors(const FiniteGroupTable& t);

enum class Crosscheck { Match, Mismatch, Inconclusive };

struct CrosscheckResult {
  Crosscheck verdict = Crosscheck::Inconclusive;
  std::string detail;
};

CrosscheckResult crosscheck_cokernel(const Graph& g, const CongruenceClasses& c);
CrosscheckResult crosscheck_cokernel(const Graph& g, unsigned bound);

const char* to_string(Crosscheck c);

}  // namespace lpa
