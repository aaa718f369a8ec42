#include <random>
#include <variant>

#include "doctest.h"
#include "lpa/graph.hpp"
#include "lpa/graph_monoid.hpp"
#include "lpa/ktheory.hpp"

using namespace lpa;

namespace {

// True when b is obtained from a by replacing one v_g with its relation
// right-hand side, or the reverse.
bool one_rewrite(const MonoidPresentation& p, const MonoidVector& a, const MonoidVector& b) {
  auto forward = [&](const MonoidVector& x, const MonoidVector& y) {
    for (const auto& r : p.relations) {
      if (x[r.generator] == 0) continue;
      MonoidVector t = x;
      t[r.generator] -= 1;
      for (std::size_t j = 0; j < t.size(); ++j) t[j] += r.rhs[j];
      if (t == y) return true;
    }
    return false;
  };
  return forward(a, b) || forward(b, a);
}

// Image of a vector in the cokernel: sum of x_i [v_i].
GroupElement k0_image(const PointedK0& k, const MonoidVector& x) {
  GroupElement s = zero_element(k.group);
  for (std::size_t i = 0; i < x.size(); ++i) s = add(k.group, s, scale(k.group, Integer(x[i]), k.vertex_images[i]));
  return s;
}

MonoidVector random_vector(std::mt19937& rng, std::size_t n, unsigned max_sum) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<unsigned> len(0, max_sum);
  MonoidVector v(n, 0);
  for (unsigned s = len(rng); s > 0; --s) v[pick(rng)] += 1;
  return v;
}

unsigned sum(const MonoidVector& v) {
  unsigned s = 0;
  for (unsigned x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("presentation") {
  auto p = presentation(cayley_graph(3));
  CHECK(p.generator_count == 3);
  REQUIRE(p.relations.size() == 3);
  CHECK(p.relations[0].generator == 0);
  CHECK(p.relations[0].rhs == std::vector<unsigned>{0, 1, 1});
  CHECK(p.relations[2].rhs == std::vector<unsigned>{1, 1, 0});

  auto c1 = presentation(cayley_graph(1));
  REQUIRE(c1.relations.size() == 1);
  CHECK(c1.relations[0].rhs == std::vector<unsigned>{2});

  Graph sink({"a", "b"}, {{"e", 0, 1}});
  auto ps = presentation(sink);
  REQUIRE(ps.relations.size() == 1);
  CHECK(ps.relations[0].generator == 0);
  CHECK(presentation(Graph({"a"}, {})).relations.empty());
  CHECK(default_bound(p) == 12);
  CHECK(default_bound(c1) == 8);
}

TEST_CASE("saturate examples") {
  SUBCASE("C3") {
    auto c = saturate(presentation(cayley_graph(3)), 8);
    CHECK(c.class_count() == 5);
    CHECK(c.nonzero_class_count() == 4);
    CHECK(c.stabilized());
    CHECK(c.vector_count() == 165);
    CHECK(c.representative(0) == MonoidVector{0, 0, 0});
    CHECK(c.class_size(0) == 1);
    CHECK(c.equivalent({1, 0, 0}, {0, 1, 1}));
    CHECK_FALSE(c.equivalent({1, 0, 0}, {0, 1, 0}));
    CHECK_THROWS_AS(c.class_of({9, 0, 0}), DomainError);
    CHECK_FALSE(c.in_box({5, 4, 0}));
    for (unsigned b : {6u, 8u, 10u}) {
      auto cb = saturate(presentation(cayley_graph(3)), b);
      CHECK(cb.nonzero_class_count() == 4);
      CHECK(cb.stabilized());
    }
  }
  SUBCASE("C1 and R_2") {
    auto c1 = saturate(presentation(cayley_graph(1)), 6);
    CHECK(c1.class_count() == 2);
    auto r2 = saturate(presentation(rose_graph(2)), 5);
    CHECK(r2.class_count() == 2);
    CHECK(r2.stabilized());
  }
  SUBCASE("counts over bounds") {
    auto c = saturate(presentation(cayley_graph(4)), 10);
    REQUIRE(c.nonzero_counts().size() == 3);
    CHECK(c.nonzero_counts()[2] == c.nonzero_class_count());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(saturate(presentation(cayley_graph(1)), 1), DomainError);
    CHECK_THROWS_AS(saturate(presentation(cayley_graph(3)), 0), DomainError);
    CHECK_THROWS_AS(saturate(presentation(cayley_graph(3)), 256), DomainError);
    CHECK_THROWS_AS(saturate(presentation(cayley_graph(40)), 200), DomainError);
  }
}

TEST_CASE("representatives are canonical") {
  auto c = saturate(presentation(cayley_graph(5)), 10);
  for (std::size_t k = 0; k < c.class_count(); ++k) {
    const MonoidVector r = c.representative(k);
    CHECK(c.class_of(r) == k);
    std::size_t count = 0;
    for (const auto& m : c.members(k)) {
      ++count;
      CHECK(c.class_of(m) == k);
      CHECK(sum(m) >= sum(r));
      if (sum(m) == sum(r)) CHECK(m <= r);
    }
    CHECK(count == c.class_size(k));
    if (k > 0) CHECK(sum(c.representative(k - 1)) <= sum(r));
  }
}

TEST_CASE("rewrite chains are sound") {
  std::mt19937 rng(5);
  for (long n : {3L, 4L, 5L}) {
    const Graph g = cayley_graph(n);
    auto c = saturate(presentation(g), 9);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
      MonoidVector x = random_vector(rng, static_cast<std::size_t>(n), 9);
      MonoidVector y = random_vector(rng, static_cast<std::size_t>(n), 9);
      if (!c.equivalent(x, y)) {
        CHECK_THROWS_AS(c.rewrite_chain(x, y), DomainError);
        continue;
      }
      ++checked;
      auto chain = c.rewrite_chain(x, y);
      REQUIRE_FALSE(chain.empty());
      CHECK(chain.front() == x);
      CHECK(chain.back() == y);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(one_rewrite(c.presentation(), chain[i], chain[i + 1]));
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("congruence respects translation") {
  std::mt19937 rng(17);
  auto c = saturate(presentation(cayley_graph(4)), 10);
  int hits = 0;
  for (int t = 0; t < 2000 && hits < 100; ++t) {
    MonoidVector x = random_vector(rng, 4, 6);
    MonoidVector y = random_vector(rng, 4, 6);
    MonoidVector w = random_vector(rng, 4, 4);
    if (!c.equivalent(x, y)) continue;
    MonoidVector xw = x, yw = y;
    for (std::size_t i = 0; i < 4; ++i) xw[i] += w[i], yw[i] += w[i];
    if (!c.in_box(xw) || !c.in_box(yw)) continue;
    ++hits;
    CHECK(c.equivalent(xw, yw));
  }
  CHECK(hits == 100);
}

TEST_CASE("classes agree with cokernel images") {
  for (long n : {2L, 3L, 4L, 5L, 7L}) {
    const Graph g = cayley_graph(n);
    const PointedK0 k = cokernel_pointed(g);
    auto c = saturate(presentation(g), 9);
    REQUIRE(c.stabilized());
    std::vector<GroupElement> image_of_class(c.class_count());
    std::vector<bool> set(c.class_count(), false);
    for (std::size_t cls = 1; cls < c.class_count(); ++cls)
      for (const auto& m : c.members(cls)) {
        GroupElement e = k0_image(k, m);
        if (!set[cls]) image_of_class[cls] = e, set[cls] = true;
        CHECK(image_of_class[cls] == e);
      }
    for (std::size_t a = 1; a < c.class_count(); ++a)
      for (std::size_t b = a + 1; b < c.class_count(); ++b) CHECK(image_of_class[a] != image_of_class[b]);
  }
}

TEST_CASE("mstar_group") {
  SUBCASE("C3 is the Klein group") {
    auto c = saturate(presentation(cayley_graph(3)), 8);
    auto r = mstar_group(c);
    REQUIRE(std::holds_alternative<FiniteGroupTable>(r));
    const auto& t = std::get<FiniteGroupTable>(r);
    CHECK(t.size() == 4);
    CHECK(invariant_factors(t) == std::vector<Integer>{2, 2});
    CHECK(t.element_class_ids[t.identity] == c.class_of({1, 1, 1}));
    CHECK(c.equivalent({1, 1, 1}, {2, 0, 0}));
    for (std::size_t e = 0; e < t.size(); ++e) {
      CHECK(t.element_order(e) == (e == t.identity ? 1u : 2u));
      CHECK(t.table[e][t.inverse[e]] == t.identity);
    }
  }
  SUBCASE("identity is the sum of all vertices") {
    for (long n : {4L, 5L, 7L}) {
      auto c = saturate(presentation(cayley_graph(n)), 12);
      auto r = mstar_group(c);
      REQUIRE(std::holds_alternative<FiniteGroupTable>(r));
      const auto& t = std::get<FiniteGroupTable>(r);
      CHECK(t.element_class_ids[t.identity] == c.class_of(MonoidVector(static_cast<std::size_t>(n), 1)));
    }
  }
  SUBCASE("C1 is trivial") {
    auto r = mstar_group(saturate(presentation(cayley_graph(1)), 6));
    REQUIRE(std::holds_alternative<FiniteGroupTable>(r));
    CHECK(std::get<FiniteGroupTable>(r).size() == 1);
    CHECK(invariant_factors(std::get<FiniteGroupTable>(r)).empty());
  }
  SUBCASE("C4 is cyclic of order 3") {
    auto r = mstar_group(saturate(presentation(cayley_graph(4)), 10));
    REQUIRE(std::holds_alternative<FiniteGroupTable>(r));
    CHECK(invariant_factors(std::get<FiniteGroupTable>(r)) == std::vector<Integer>{3});
  }
  SUBCASE("C6 does not close") {
    auto r = mstar_group(saturate(presentation(cayley_graph(6)), 10));
    CHECK(std::holds_alternative<NotClosed>(r));
  }
}

TEST_CASE("crosscheck_cokernel") {
  CHECK(crosscheck_cokernel(cayley_graph(3), 8).verdict == Crosscheck::Match);
  CHECK(crosscheck_cokernel(cayley_graph(4), 10).verdict == Crosscheck::Match);
  CHECK(crosscheck_cokernel(cayley_graph(6), 10).verdict == Crosscheck::Inconclusive);
  CHECK(crosscheck_cokernel(stemmed_rose_graph(4, 3), 10).verdict == Crosscheck::Match);
  for (long n : {1L, 2L, 5L, 7L, 8L}) {
    auto r = crosscheck_cokernel(cayley_graph(n), 12);
    CHECK_MESSAGE(r.verdict == Crosscheck::Match, "n=" << n << " " << r.detail);
  }
  CHECK(std::string(to_string(Crosscheck::Mismatch)) == "MISMATCH");
}
