#include "lpa/ktheory.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "lpa/smith.hpp"

namespace lpa {

AbelianGroup::AbelianGroup(std::vector<Integer> factors) : factors_(std::move(factors)) {
  bool seen_zero = false;
  const Integer* prev = nullptr;
  for (const Integer& d : factors_) {
    if (d < 0 || d == 1) throw DomainError("invariant factors must be 0 or at least 2");
    if (d == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw DomainError("finite invariant factors must precede the free part");
    if (prev && !mpz_divisible_p(d.get_mpz_t(), prev->get_mpz_t()))
      throw DomainError("finite invariant factors must form a divisibility chain");
    prev = &d;
  }
}

AbelianGroup AbelianGroup::from_smith_diagonal(const std::vector<Integer>& d) {
  std::vector<Integer> kept;
  for (const Integer& x : d)
    if (x != 1) kept.push_back(x);
  return AbelianGroup(std::move(kept));
}

bool AbelianGroup::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Integer& d) { return d == 0; });
}

std::optional<Integer> AbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const Integer& d : factors_) n *= d;
  return n;
}

bool is_valid_element(const AbelianGroup& g, const GroupElement& x) {
  if (x.coords.size() != g.rank()) return false;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const Integer& d = g.factors()[i];
    if (d != 0 && (x.coords[i] < 0 || x.coords[i] >= d)) return false;
  }
  return true;
}

GroupElement reduce(const AbelianGroup& g, std::vector<Integer> coords) {
  if (coords.size() != g.rank()) throw DomainError("element length does not match the group");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (g.factors()[i] != 0) coords[i] = mod_floor(coords[i], g.factors()[i]);
  return GroupElement{std::move(coords)};
}

GroupElement zero_element(const AbelianGroup& g) {
  return GroupElement{std::vector<Integer>(g.rank(), Integer(0))};
}

bool is_zero(const GroupElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Integer& c) { return c == 0; });
}

GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y) {
  if (x.coords.size() != g.rank() || y.coords.size() != g.rank())
    throw DomainError("element length does not match the group");
  std::vector<Integer> c(g.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
  return reduce(g, std::move(c));
}

GroupElement negate(const AbelianGroup& g, const GroupElement& x) { return scale(g, -1, x); }

GroupElement scale(const AbelianGroup& g, const Integer& k, const GroupElement& x) {
  std::vector<Integer> c = x.coords;
  for (auto& ci : c) ci *= k;
  return reduce(g, std::move(c));
}

std::optional<Integer> element_order(const AbelianGroup& g, const GroupElement& x) {
  if (!is_valid_element(g, x)) throw DomainError("element is not valid for the group");
  Integer ord = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const Integer& d = g.factors()[i];
    if (x.coords[i] == 0) continue;
    if (d == 0) return std::nullopt;
    ord = lcm(ord, Integer(d / gcd(d, x.coords[i])));
  }
  return ord;
}

namespace {

// A finite abelian group of small order with elements encoded in mixed radix.
class SmallGroup {
 public:
  explicit SmallGroup(const AbelianGroup& g) {
    for (const Integer& d : g.factors()) radix_.push_back(d.get_si());
    order_ = 1;
    for (long d : radix_) order_ *= d;
  }

  long order() const { return order_; }
  std::size_t rank() const { return radix_.size(); }
  long radix(std::size_t i) const { return radix_[i]; }

  long encode(const GroupElement& x) const {
    long code = 0;
    for (std::size_t i = rank(); i-- > 0;) code = code * radix_[i] + x.coords[i].get_si();
    return code;
  }

  std::vector<long> decode(long code) const {
    std::vector<long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      c[i] = code % radix_[i];
      code /= radix_[i];
    }
    return c;
  }

  long add(long a, long b) const {
    long code = 0, mult = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      long ai = a % radix_[i], bi = b % radix_[i];
      a /= radix_[i];
      b /= radix_[i];
      code += ((ai + bi) % radix_[i]) * mult;
      mult *= radix_[i];
    }
    return code;
  }

  long scale(long k, long a) const {
    long code = 0, mult = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      long ai = a % radix_[i];
      a /= radix_[i];
      long r = static_cast<long>((static_cast<std::int64_t>(k % radix_[i]) * ai) % radix_[i]);
      if (r < 0) r += radix_[i];
      code += r * mult;
      mult *= radix_[i];
    }
    return code;
  }

  long element_order(long a) const {
    auto c = decode(a);
    long ord = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      if (c[i] != 0) ord = std::lcm(ord, radix_[i] / std::gcd(radix_[i], c[i]));
    return ord;
  }

  // a lies in m*G iff every coordinate is divisible by gcd(m, d_i).
  bool divisible_by(long a, long m) const {
    auto c = decode(a);
    for (std::size_t i = 0; i < rank(); ++i)
      if (c[i] % std::gcd(m, radix_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<long> radix_;
  long order_ = 1;
};

// Automorphisms of G preserve the order of every element and membership of
// every multiple of it in each subgroup m*G.
bool same_divisibility_profile(const SmallGroup& G, long x, long y) {
  long exponent = 1;
  for (std::size_t i = 0; i < G.rank(); ++i) exponent = std::lcm(exponent, G.radix(i));
  std::vector<long> divisors;
  for (long m = 2; m <= exponent; ++m)
    if (exponent % m == 0) divisors.push_back(m);
  const long ord = G.element_order(x);
  for (long k = 1; k <= ord; ++k) {
    long kx = G.scale(k, x), ky = G.scale(k, y);
    for (long m : divisors)
      if (G.divisible_by(kx, m) != G.divisible_by(ky, m)) return false;
  }
  return true;
}

// Depth-first search over images a_k of the standard generators e_k. Each
// a_k must have order exactly d_k and meet the subgroup generated by the
// earlier images trivially, which makes the induced homomorphism injective
// and hence bijective at full depth.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const SmallGroup& G, long x, long y) : G_(G), x_(G.decode(x)), y_(y) {
    for (long a = 0; a < G.order(); ++a) by_order_[G.element_order(a)].push_back(a);
    last_nonzero_ = 0;
    for (std::size_t k = 0; k < G.rank(); ++k)
      if (x_[k] != 0) last_nonzero_ = k;
  }

  PointedIso run() {
    std::vector<char> in_sub(static_cast<std::size_t>(G_.order()), 0);
    in_sub[0] = 1;
    std::vector<long> sub{0};
    switch (dfs(0, 0, in_sub, sub)) {
      case Result::Found: return PointedIso::Yes;
      case Result::Exhausted: return PointedIso::No;
      case Result::Budget: return PointedIso::Unsupported;
    }
    return PointedIso::Unsupported;
  }

 private:
  enum class Result { Found, Exhausted, Budget };
  static constexpr long kNodeBudget = 2'000'000;

  Result dfs(std::size_t k, long partial, std::vector<char>& in_sub, std::vector<long>& sub) {
    if (k == G_.rank()) return partial == y_ ? Result::Found : Result::Exhausted;
    const long d = G_.radix(k);
    auto it = by_order_.find(d);
    if (it == by_order_.end()) return Result::Exhausted;
    for (long a : it->second) {
      if (++nodes_ > kNodeBudget) return Result::Budget;
      long next_partial = G_.add(partial, G_.scale(x_[k], a));
      // Past the last nonzero coordinate of x the image of x is fixed.
      if (k >= last_nonzero_ && next_partial != y_) continue;
      bool independent = true;
      for (long m = 1; m < d && independent; ++m) independent = !in_sub[G_.scale(m, a)];
      if (!independent) continue;

      const std::size_t old_size = sub.size();
      for (long m = 1; m < d; ++m) {
        long ma = G_.scale(m, a);
        for (std::size_t s = 0; s < old_size; ++s) {
          long e = G_.add(sub[s], ma);
          in_sub[e] = 1;
          sub.push_back(e);
        }
      }
      Result r = dfs(k + 1, next_partial, in_sub, sub);
      for (std::size_t s = old_size; s < sub.size(); ++s) in_sub[sub[s]] = 0;
      sub.resize(old_size);
      if (r != Result::Exhausted) return r;
    }
    return Result::Exhausted;
  }

  const SmallGroup& G_;
  std::vector<long> x_;
  long y_;
  std::size_t last_nonzero_;
  std::map<long, std::vector<long>> by_order_;
  long nodes_ = 0;
};

}  // namespace

PointedIso pointed_iso_exists(const AbelianGroup& g, const GroupElement& x,
                              const AbelianGroup& h, const GroupElement& y) {
  if (!is_valid_element(g, x)) throw DomainError("pointed_iso_exists: x is not valid for g");
  if (!is_valid_element(h, y)) throw DomainError("pointed_iso_exists: y is not valid for h");
  if (g.factors() != h.factors()) return PointedIso::No;
  if (element_order(g, x) != element_order(h, y)) return PointedIso::No;
  if (is_zero(x) && is_zero(y)) return PointedIso::Yes;
  if (!g.is_finite()) return PointedIso::Unsupported;
  if (*g.order() > kPointedIsoMaxOrder) return PointedIso::Unsupported;

  SmallGroup G(g);
  const long xc = G.encode(x), yc = G.encode(y);
  if (!same_divisibility_profile(G, xc, yc)) return PointedIso::No;
  return AutomorphismSearch(G, xc, yc).run();
}

IntMatrix b_matrix(const Graph& g) {
  return IntMatrix::identity(g.vertex_count()) - adjacency_matrix(g).transpose();
}

PointedK0 cokernel_pointed(const IntMatrix& b) {
  if (!b.is_square()) throw DomainError("cokernel_pointed: matrix must be square");
  const std::size_t n = b.rows();
  SmithDecomposition snf = smith_normal_form(b);

  // u carries Z^n / Im(b) onto the diagonal quotient, so the class of the
  // i-th basis vector is column i of u read in the nontrivial coordinates.
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < snf.d.size(); ++k)
    if (snf.d[k] != 1) kept.push_back(k);

  PointedK0 k0;
  k0.group = AbelianGroup::from_smith_diagonal(snf.d);
  k0.smith_diagonal = snf.d;
  std::vector<Integer> total(kept.size(), Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> c;
    c.reserve(kept.size());
    for (std::size_t k : kept) c.push_back(snf.u(k, i));
    for (std::size_t k = 0; k < kept.size(); ++k) total[k] += c[k];
    k0.vertex_images.push_back(reduce(k0.group, std::move(c)));
  }
  k0.distinguished = reduce(k0.group, std::move(total));
  return k0;
}

PointedK0 cokernel_pointed(const Graph& g) { return cokernel_pointed(b_matrix(g)); }

std::string group_label(const AbelianGroup& g) {
  if (g.rank() == 0) return "0";
  std::string s;
  for (const Integer& d : g.factors()) {
    if (!s.empty()) s += " x ";
    s += d == 0 ? "Z" : "Z/" + d.get_str();
  }
  return s;
}

std::string element_label(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ", ";
    s += x.coords[i].get_str();
  }
  return s + ")";
}

}  // namespace lpa
