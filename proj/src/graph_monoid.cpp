#include "lpa/graph_monoid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "lpa/ktheory.hpp"

namespace lpa {

MonoidPresentation presentation(const Graph& g) {
  const IntMatrix a = adjacency_matrix(g);
  MonoidPresentation p;
  p.generator_count = g.vertex_count();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (g.out_degree(i) == 0) continue;
    MonoidRelation r{i, std::vector<unsigned>(g.vertex_count(), 0)};
    for (std::size_t j = 0; j < g.vertex_count(); ++j) r.rhs[j] = static_cast<unsigned>(a(i, j).get_ui());
    p.relations.push_back(std::move(r));
  }
  return p;
}

namespace {

unsigned rhs_sum(const MonoidRelation& r) {
  return std::accumulate(r.rhs.begin(), r.rhs.end(), 0u);
}

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return std::min(kSaturated, a + b); }

}  // namespace

unsigned default_bound(const MonoidPresentation& p) {
  unsigned widest = 0;
  for (const auto& r : p.relations) widest = std::max(widest, rhs_sum(r));
  return std::max<unsigned>(8, 2 * static_cast<unsigned>(p.generator_count) * widest);
}

namespace detail {

// All vectors of N^n with coordinate sum <= bound, in lexicographic order,
// with O(n) ranking.
class Box {
 public:
  Box(std::size_t n, unsigned bound) : n_(n), bound_(bound) {
    if (bound > 255) throw DomainError("saturate: bound must not exceed 255");
    // within[k][s]: vectors of length k with sum <= s.
    std::vector<std::vector<std::uint64_t>> within(n + 1, std::vector<std::uint64_t>(bound + 1, 1));
    for (std::size_t k = 1; k <= n; ++k)
      for (unsigned s = 0; s <= bound; ++s) {
        std::uint64_t c = 0;
        for (unsigned v = 0; v <= s; ++v) c = sat_add(c, within[k - 1][s - v]);
        within[k][s] = c;
      }
    if (within[n][bound] > kMaxBoxVectors)
      throw DomainError("saturate: box with bound " + std::to_string(bound) + " over " +
                        std::to_string(n) + " generators is too large");
    size_ = static_cast<std::size_t>(within[n][bound]);

    const std::size_t w = bound + 1;
    offset_.assign(n * w * (w + 1), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned s = 0; s <= bound; ++s) {
        std::uint64_t acc = 0;
        for (unsigned v = 0; v <= s; ++v) {
          offset_[(i * w + s) * (w + 1) + v] = acc;
          acc += within[n - i - 1][s - v];
        }
      }

    coords_.assign(size_ * n, 0);
    sums_.assign(size_, 0);
    std::vector<unsigned> x(n, 0);
    unsigned sum = 0;
    for (std::size_t r = 0; r < size_; ++r) {
      for (std::size_t i = 0; i < n; ++i) coords_[r * n + i] = static_cast<std::uint8_t>(x[i]);
      sums_[r] = static_cast<std::uint8_t>(sum);
      if (n == 0) break;
      if (sum < bound) {
        ++x[n - 1];
        ++sum;
        continue;
      }
      std::size_t last = n;
      while (last-- > 0 && x[last] == 0) {
      }
      if (last == 0) break;
      sum -= x[last];
      x[last] = 0;
      ++x[last - 1];
      ++sum;
    }
  }

  std::size_t size() const { return size_; }
  std::size_t dims() const { return n_; }
  unsigned bound() const { return bound_; }
  unsigned sum(std::size_t r) const { return sums_[r]; }
  unsigned coord(std::size_t r, std::size_t i) const { return coords_[r * n_ + i]; }
  MonoidVector vec(std::size_t r) const {
    MonoidVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = coord(r, i);
    return v;
  }

  template <typename Src>
  std::size_t rank(const Src& x) const {
    const std::size_t w = bound_ + 1;
    std::size_t r = 0;
    unsigned rem = bound_;
    for (std::size_t i = 0; i < n_; ++i) {
      r += offset_[(i * w + rem) * (w + 1) + x[i]];
      rem -= x[i];
    }
    return r;
  }

  bool contains(const MonoidVector& x) const {
    if (x.size() != n_) return false;
    unsigned long s = 0;
    for (unsigned c : x) s += c;
    return s <= bound_;
  }

 private:
  std::size_t n_;
  unsigned bound_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint8_t> coords_;
  std::vector<std::uint8_t> sums_;
};

enum class ProofKind : std::uint8_t { Rewrite, Translate };

// Edge between a node and its proof-forest parent. For a translation edge
// the endpoints are box[a] + e_k and box[b] + e_k, oriented node -> parent.
struct ProofEdge {
  ProofKind kind = ProofKind::Rewrite;
  std::uint16_t k = 0;
  std::uint32_t a = kNone;
  std::uint32_t b = kNone;
};

class Closure {
 public:
  Closure(const Box& box, bool record_proofs)
      : box_(box), parent_(box.size()), size_(box.size(), 1), record_(record_proofs) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    if (record_) {
      proof_parent_.assign(box.size(), kNone);
      proof_edge_.resize(box.size());
    }
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b, ProofEdge edge) {
    std::uint32_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] > size_[rb]) {
      std::swap(ra, rb);
      std::swap(a, b);
      std::swap(edge.a, edge.b);
    }
    if (record_) {
      reroot(a);
      proof_parent_[a] = b;
      proof_edge_[a] = edge;
    }
    parent_[ra] = rb;
    size_[rb] += size_[ra];
    return true;
  }

  void run(const MonoidPresentation& p) {
    const std::size_t n = box_.dims();
    const unsigned bound = box_.bound();
    std::vector<unsigned> x(n);

    // Each rewrite edge w <-> w - e_i + rhs is visited once, from w.
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
      const auto& rel = p.relations[ri];
      const unsigned grow = rhs_sum(rel);
      for (std::size_t r = 0; r < box_.size(); ++r) {
        if (box_.coord(r, rel.generator) == 0 || box_.sum(r) - 1 + grow > bound) continue;
        for (std::size_t i = 0; i < n; ++i) x[i] = box_.coord(r, i) + rel.rhs[i];
        --x[rel.generator];
        unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(box_.rank(x)),
              {ProofKind::Rewrite, static_cast<std::uint16_t>(ri), kNone, kNone});
      }
    }

    // Translation closure: x ~ x0 forces x + e_j ~ x0 + e_j inside the box.
    std::vector<std::uint32_t> seen(box_.size());
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), kNone);
        for (std::size_t r = 0; r < box_.size(); ++r) {
          if (box_.sum(r) >= bound) continue;
          const std::uint32_t root = find(static_cast<std::uint32_t>(r));
          if (seen[root] == kNone) {
            seen[root] = static_cast<std::uint32_t>(r);
            continue;
          }
          const std::uint32_t r0 = seen[root];
          const auto t = static_cast<std::uint32_t>(shifted_rank(r, j, x));
          const auto t0 = static_cast<std::uint32_t>(shifted_rank(r0, j, x));
          changed |= unite(t, t0, {ProofKind::Translate, static_cast<std::uint16_t>(j),
                                   static_cast<std::uint32_t>(r), r0});
        }
      }
    }
  }

  std::vector<std::uint32_t> take_proof_parent() { return std::move(proof_parent_); }
  std::vector<ProofEdge> take_proof_edges() { return std::move(proof_edge_); }

 private:
  std::size_t shifted_rank(std::size_t r, std::size_t j, std::vector<unsigned>& x) const {
    for (std::size_t i = 0; i < box_.dims(); ++i) x[i] = box_.coord(r, i);
    ++x[j];
    return box_.rank(x);
  }

  // Make v the root of its proof tree by reversing the path above it.
  void reroot(std::uint32_t v) {
    std::uint32_t prev = kNone;
    ProofEdge carried{};
    while (v != kNone) {
      const std::uint32_t next = proof_parent_[v];
      ProofEdge e = proof_edge_[v];
      proof_parent_[v] = prev;
      proof_edge_[v] = carried;
      std::swap(e.a, e.b);
      carried = e;
      prev = v;
      v = next;
    }
  }

  const Box& box_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  bool record_;
  std::vector<std::uint32_t> proof_parent_;
  std::vector<ProofEdge> proof_edge_;
};

struct SaturationState {
  MonoidPresentation pres;
  Box box;
  std::vector<std::uint32_t> class_of_rank;
  std::vector<std::uint32_t> rep_rank;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> counts;
  std::vector<std::uint32_t> proof_parent;
  std::vector<ProofEdge> proof_edge;

  SaturationState(MonoidPresentation p, unsigned bound)
      : pres(std::move(p)), box(pres.generator_count, bound) {}

  // Chain from box[p] to box[q] through the proof forest.
  std::vector<MonoidVector> explain(std::uint32_t p, std::uint32_t q) const {
    std::unordered_map<std::uint32_t, std::size_t> depth_from_p;
    std::vector<std::uint32_t> up_p{p};
    for (std::uint32_t v = p; proof_parent[v] != kNone; v = proof_parent[v]) up_p.push_back(proof_parent[v]);
    for (std::size_t i = 0; i < up_p.size(); ++i) depth_from_p.emplace(up_p[i], i);
    std::vector<std::uint32_t> up_q{q};
    while (!depth_from_p.count(up_q.back())) {
      const std::uint32_t next = proof_parent[up_q.back()];
      if (next == kNone) throw DomainError("rewrite_chain: vectors are not equivalent");
      up_q.push_back(next);
    }
    const std::size_t lca_depth = depth_from_p.at(up_q.back());

    std::vector<MonoidVector> chain{box.vec(p)};
    auto append = [&chain](std::vector<MonoidVector> seg) {
      chain.insert(chain.end(), seg.begin() + 1, seg.end());
    };
    for (std::size_t i = 0; i < lca_depth; ++i) append(edge_chain(up_p[i]));
    for (std::size_t i = up_q.size() - 1; i-- > 0;) {
      auto seg = edge_chain(up_q[i]);
      std::reverse(seg.begin(), seg.end());
      append(std::move(seg));
    }
    return chain;
  }

  // Chain from box[v] to box[proof_parent[v]].
  std::vector<MonoidVector> edge_chain(std::uint32_t v) const {
    const ProofEdge& e = proof_edge[v];
    if (e.kind == ProofKind::Rewrite) return {box.vec(v), box.vec(proof_parent[v])};
    auto inner = explain(e.a, e.b);
    for (auto& x : inner) ++x[e.k];
    return inner;
  }
};

}  // namespace detail

namespace {

void check_relations(const MonoidPresentation& p) {
  for (const auto& r : p.relations) {
    if (r.generator >= p.generator_count || r.rhs.size() != p.generator_count)
      throw DomainError("presentation: relation does not match the generator count");
  }
}

std::size_t count_nonzero_classes(const MonoidPresentation& p, unsigned bound) {
  detail::Box box(p.generator_count, bound);
  detail::Closure closure(box, false);
  closure.run(p);
  std::size_t roots = 0;
  for (std::size_t r = 0; r < box.size(); ++r)
    if (closure.find(static_cast<std::uint32_t>(r)) == r) ++roots;
  return roots - 1;
}

}  // namespace

CongruenceClasses saturate(const MonoidPresentation& p, unsigned bound) {
  check_relations(p);
  unsigned needed = 1;
  for (const auto& r : p.relations) needed = std::max(needed, rhs_sum(r));
  if (bound < needed)
    throw DomainError("saturate: bound " + std::to_string(bound) + " cannot express a relation (need " +
                      std::to_string(needed) + ")");

  auto state = std::make_unique<detail::SaturationState>(p, bound);
  const detail::Box& box = state->box;
  detail::Closure closure(box, true);
  closure.run(state->pres);

  // Number classes by representative: least sum, then lexicographically largest.
  std::map<std::uint32_t, std::uint32_t> best_by_root;
  for (std::size_t r = 0; r < box.size(); ++r) {
    const std::uint32_t root = closure.find(static_cast<std::uint32_t>(r));
    auto [it, inserted] = best_by_root.emplace(root, static_cast<std::uint32_t>(r));
    if (!inserted) {
      const std::uint32_t cur = it->second;
      if (box.sum(r) < box.sum(cur) || (box.sum(r) == box.sum(cur) && r > cur))
        it->second = static_cast<std::uint32_t>(r);
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;  // (rep rank, root)
  for (auto [root, rep] : best_by_root) reps.emplace_back(rep, root);
  std::sort(reps.begin(), reps.end(), [&box](auto x, auto y) {
    if (box.sum(x.first) != box.sum(y.first)) return box.sum(x.first) < box.sum(y.first);
    return x.first > y.first;
  });
  std::unordered_map<std::uint32_t, std::uint32_t> class_of_root;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    class_of_root.emplace(reps[c].second, static_cast<std::uint32_t>(c));
    state->rep_rank.push_back(reps[c].first);
  }
  state->class_of_rank.resize(box.size());
  state->class_sizes.assign(reps.size(), 0);
  for (std::size_t r = 0; r < box.size(); ++r) {
    const std::uint32_t c = class_of_root.at(closure.find(static_cast<std::uint32_t>(r)));
    state->class_of_rank[r] = c;
    ++state->class_sizes[c];
  }
  state->proof_parent = closure.take_proof_parent();
  state->proof_edge = closure.take_proof_edges();

  const std::size_t here = reps.size() - 1;
  state->counts.clear();
  if (bound >= 3) state->counts.push_back(count_nonzero_classes(state->pres, bound - 2));
  if (bound >= 2) state->counts.push_back(count_nonzero_classes(state->pres, bound - 1));
  state->counts.push_back(here);

  return CongruenceClasses(std::move(state));
}

CongruenceClasses::CongruenceClasses(std::unique_ptr<detail::SaturationState> state)
    : state_(std::move(state)) {}
CongruenceClasses::CongruenceClasses(CongruenceClasses&&) noexcept = default;
CongruenceClasses& CongruenceClasses::operator=(CongruenceClasses&&) noexcept = default;
CongruenceClasses::~CongruenceClasses() = default;

unsigned CongruenceClasses::bound() const { return state_->box.bound(); }
std::size_t CongruenceClasses::generator_count() const { return state_->box.dims(); }
std::size_t CongruenceClasses::vector_count() const { return state_->box.size(); }
std::size_t CongruenceClasses::class_count() const { return state_->rep_rank.size(); }
const std::vector<std::size_t>& CongruenceClasses::nonzero_counts() const { return state_->counts; }

bool CongruenceClasses::stabilized() const {
  const auto& c = state_->counts;
  return c.size() == 3 && c[0] == c[1] && c[1] == c[2];
}

bool CongruenceClasses::in_box(const MonoidVector& x) const { return state_->box.contains(x); }

std::size_t CongruenceClasses::class_of(const MonoidVector& x) const {
  if (!in_box(x)) throw DomainError("class_of: vector lies outside the saturation box");
  return state_->class_of_rank[state_->box.rank(x)];
}

bool CongruenceClasses::equivalent(const MonoidVector& x, const MonoidVector& y) const {
  return class_of(x) == class_of(y);
}

MonoidVector CongruenceClasses::representative(std::size_t cls) const {
  return state_->box.vec(state_->rep_rank.at(cls));
}

std::size_t CongruenceClasses::class_size(std::size_t cls) const { return state_->class_sizes.at(cls); }

std::vector<MonoidVector> CongruenceClasses::members(std::size_t cls) const {
  std::vector<MonoidVector> out;
  for (std::size_t r = 0; r < state_->box.size(); ++r)
    if (state_->class_of_rank[r] == cls) out.push_back(state_->box.vec(r));
  return out;
}

std::vector<MonoidVector> CongruenceClasses::rewrite_chain(const MonoidVector& x,
                                                           const MonoidVector& y) const {
  if (!in_box(x) || !in_box(y)) throw DomainError("rewrite_chain: vector lies outside the box");
  const auto p = static_cast<std::uint32_t>(state_->box.rank(x));
  const auto q = static_cast<std::uint32_t>(state_->box.rank(y));
  if (state_->class_of_rank[p] != state_->class_of_rank[q])
    throw DomainError("rewrite_chain: vectors are not equivalent");
  return state_->explain(p, q);
}

const MonoidPresentation& CongruenceClasses::presentation() const { return state_->pres; }

std::size_t FiniteGroupTable::element_of_class(std::size_t cls) const {
  auto it = std::find(element_class_ids.begin(), element_class_ids.end(), cls);
  if (it == element_class_ids.end()) throw DomainError("class is not an element of the group");
  return static_cast<std::size_t>(it - element_class_ids.begin());
}

std::size_t FiniteGroupTable::element_order(std::size_t element) const {
  std::size_t k = 1;
  for (std::size_t x = element; x != identity; x = table[x][element]) ++k;
  return k;
}

MStarResult mstar_group(const CongruenceClasses& c) {
  if (!c.stabilized()) return NotClosed{"saturation has not stabilized at bound " + std::to_string(c.bound())};

  FiniteGroupTable t;
  for (std::size_t cls = 1; cls < c.class_count(); ++cls) t.element_class_ids.push_back(cls);
  const std::size_t k = t.size();
  if (k == 0) return NotClosed{"no nonzero classes"};

  std::vector<MonoidVector> reps;
  for (std::size_t cls : t.element_class_ids) reps.push_back(c.representative(cls));
  auto vsum = [](const MonoidVector& v) { return std::accumulate(v.begin(), v.end(), 0ul); };

  t.table.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (vsum(reps[a]) + vsum(reps[b]) > c.bound())
        return NotClosed{"sum of class representatives leaves the box"};
      MonoidVector s = reps[a];
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += reps[b][i];
      const std::size_t cls = c.class_of(s);
      if (cls == 0) return NotClosed{"a sum of nonzero classes is zero"};
      t.table[a][b] = t.element_of_class(cls);
    }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < k && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) ok = t.table[e][x] == x && t.table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) return NotClosed{"no identity element"};
  t.identity = *identity;

  t.inverse.assign(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    auto row = std::find(t.table[x].begin(), t.table[x].end(), t.identity);
    if (row == t.table[x].end()) return NotClosed{"an element has no inverse"};
    t.inverse[x] = static_cast<std::size_t>(row - t.table[x].begin());
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (t.table[a][b] != t.table[b][a]) return NotClosed{"table is not commutative"};
  // Associativity is inherited from vector addition once the table is well
  // defined; check it explicitly while that stays cheap.
  if (k <= 128) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t d = 0; d < k; ++d)
          if (t.table[t.table[a][b]][d] != t.table[a][t.table[b][d]])
            return NotClosed{"table is not associative"};
  }
  return t;
}

std::vector<Integer> invariant_factors(const FiniteGroupTable& t) {
  const std::size_t order = t.size();
  std::vector<std::size_t> orders(order);
  for (std::size_t x = 0; x < order; ++x) orders[x] = t.element_order(x);

  // For each prime p, |G[p^i]| = p^(s_i) and s_i - s_(i-1) counts the cyclic
  // p-factors of exponent >= i.
  std::vector<std::vector<std::size_t>> prime_parts;  // per prime, descending p-powers
  std::size_t rest = order;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::size_t> exps_at_least;  // index i-1 -> number of factors with exponent >= i
    std::size_t prev_log = 0;
    for (std::size_t pi = p;; pi *= p) {
      std::size_t killed = 0;
      for (std::size_t o : orders)
        if (pi % o == 0) ++killed;
      std::size_t log = 0;
      for (std::size_t v = killed; v % p == 0 && v > 1; v /= p) ++log;
      if (log == prev_log) break;
      exps_at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<std::size_t> powers;
    const std::size_t factor_count = exps_at_least.empty() ? 0 : exps_at_least.front();
    for (std::size_t f = 0; f < factor_count; ++f) {
      std::size_t e = 0;
      while (e < exps_at_least.size() && exps_at_least[e] > f) ++e;
      std::size_t q = 1;
      for (std::size_t i = 0; i < e; ++i) q *= p;
      powers.push_back(q);
    }
    prime_parts.push_back(std::move(powers));  // descending
  }

  std::size_t width = 0;
  for (const auto& pp : prime_parts) width = std::max(width, pp.size());
  std::vector<Integer> factors(width, Integer(1));
  for (const auto& pp : prime_parts)
    for (std::size_t f = 0; f < pp.size(); ++f) factors[width - 1 - f] *= static_cast<unsigned long>(pp[f]);
  return factors;
}

CrosscheckResult crosscheck_cokernel(const Graph& g, const CongruenceClasses& c) {
  if (!c.stabilized()) return {Crosscheck::Inconclusive, "saturation did not stabilize"};
  MStarResult m = mstar_group(c);
  if (auto* nc = std::get_if<NotClosed>(&m)) return {Crosscheck::Inconclusive, nc->reason};
  const auto& table = std::get<FiniteGroupTable>(m);

  const PointedK0 k0 = cokernel_pointed(g);
  const std::vector<Integer> monoid_factors = invariant_factors(table);
  if (monoid_factors != k0.group.factors())
    return {Crosscheck::Mismatch, "monoid group " + group_label(AbelianGroup(monoid_factors)) +
                                      " differs from cokernel " + group_label(k0.group)};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    MonoidVector e(g.vertex_count(), 0);
    e[i] = 1;
    const std::size_t mono = table.element_order(table.element_of_class(c.class_of(e)));
    const auto coker = element_order(k0.group, k0.vertex_images[i]);
    if (!coker || *coker != static_cast<unsigned long>(mono))
      return {Crosscheck::Mismatch, "order of [" + g.vertex_name(i) + "] differs"};
  }
  return {Crosscheck::Match, "group " + group_label(k0.group) + " and vertex orders agree"};
}

CrosscheckResult crosscheck_cokernel(const Graph& g, unsigned bound) {
  return crosscheck_cokernel(g, saturate(presentation(g), bound));
}

const char* to_string(Crosscheck c) {
  switch (c) {
    case Crosscheck::Match: return "MATCH";
    case Crosscheck::Mismatch: return "MISMATCH";
    case Crosscheck::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

}  // namespace lpa
