#include <numeric>

#include "doctest.h"
#include "lpa/classifier.hpp"
#include "lpa/graph.hpp"
#include "lpa/ktheory.hpp"

using namespace lpa;

namespace {

Graph from_adjacency(const std::vector<std::vector<int>>& a) {
  std::vector<std::string> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < a.size(); ++i) vs.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int c = 0; c < a[i][j]; ++c) es.push_back({"e" + std::to_string(es.size()), i, j});
  return Graph(vs, es);
}

KPOutcome expected_cayley(long m, long n) {
  return cayley_class(m).class_id == cayley_class(n).class_id ? KPOutcome::Isomorphic : KPOutcome::NotIsomorphic;
}

}  // namespace

TEST_CASE("det_sign") {
  CHECK(det_sign(cayley_graph(5)) == DetSign::Negative);
  CHECK(det_exact(b_matrix(cayley_graph(5))) == -1);
  CHECK(det_sign(cayley_graph(6)) == DetSign::Zero);
  CHECK(det_sign(stemmed_rose_graph(4, 3)) == DetSign::Negative);
  CHECK(det_exact(b_matrix(stemmed_rose_graph(4, 3))) == -3);
  CHECK(det_sign(from_adjacency({{3, 1}, {1, 2}})) == DetSign::Positive);
  CHECK(std::string(to_string(DetSign::Zero)) == "ZERO");
  CHECK(sign_of(Integer(-7)) == DetSign::Negative);
}

TEST_CASE("kp_decide examples") {
  SUBCASE("isomorphic Cayley graphs") {
    auto v = kp_decide(cayley_graph(7), cayley_graph(11));
    CHECK(v.outcome == KPOutcome::Isomorphic);
    REQUIRE(v.trace.size() == 5);
    CHECK(v.trace[0].check == "pis(E)");
    CHECK(v.trace[2].check == "k0_factors");
    CHECK(v.trace[3].check == "pointed_iso");
    CHECK(v.trace[4].check == "det_sign");
  }
  SUBCASE("different K0") {
    auto v = kp_decide(cayley_graph(3), cayley_graph(4));
    CHECK(v.outcome == KPOutcome::NotIsomorphic);
    CHECK(v.trace.back().check == "k0_factors");
  }
  SUBCASE("C2 and the stemmed rose") {
    CHECK(kp_decide(cayley_graph(2), stemmed_rose_graph(4, 3)).outcome == KPOutcome::Isomorphic);
  }
  SUBCASE("not purely infinite simple") {
    Graph sink({"a", "b"}, {{"e", 0, 1}, {"f", 0, 0}, {"g", 0, 0}});
    auto v = kp_decide(sink, cayley_graph(3));
    CHECK(v.outcome == KPOutcome::NotApplicable);
    CHECK(v.trace.size() == 2);
    CHECK(kp_decide(cayley_graph(3), Graph({"a"}, {{"l", 0, 0}})).outcome == KPOutcome::NotApplicable);
  }
  SUBCASE("opposite determinant signs") {
    const Graph pos = from_adjacency({{3, 1}, {1, 2}});
    REQUIRE(pis_report(pos).purely_infinite_simple);
    REQUIRE(cokernel_pointed(pos).group.rank() == 0);
    auto v = kp_decide(cayley_graph(1), pos);
    CHECK(v.outcome == KPOutcome::Unknown);
    CHECK(v.trace.back().result.find("opposite") != std::string::npos);
    CHECK_FALSE(canonical_form(pos).has_value());
  }
  SUBCASE("zero determinant is compatible with either sign") {
    CHECK(kp_decide(cayley_graph(6), cayley_graph(12)).outcome == KPOutcome::Isomorphic);
  }
  SUBCASE("pointed data differ") {
    // Z/3 with unit 0 against Z/3 with a generator as unit
    auto v = kp_decide(cayley_graph(2), rose_graph(4));
    CHECK(v.outcome == KPOutcome::NotIsomorphic);
    CHECK(v.trace.back().check == "pointed_iso");
  }
}

TEST_CASE("kp_decide over Cayley pairs") {
  for (long m = 1; m <= 24; ++m)
    for (long n = 1; n <= 24; ++n) {
      auto v = kp_decide(cayley_graph(m), cayley_graph(n));
      CHECK_MESSAGE(v.outcome == expected_cayley(m, n), "m=" << m << " n=" << n);
      CHECK(kp_decide(cayley_graph(n), cayley_graph(m)).outcome == v.outcome);
    }
}

TEST_CASE("C_n against the two-petal rose") {
  for (long n = 1; n <= 30; ++n) {
    const bool expect = n % 6 == 1 || n % 6 == 5;
    CHECK((kp_decide(cayley_graph(n), rose_graph(2)).outcome == KPOutcome::Isomorphic) == expect);
  }
}

TEST_CASE("canonical_form") {
  for (long n = 1; n <= 30; ++n) {
    const auto c = canonical_form(cayley_graph(n));
    const auto cls = cayley_class(n);
    CHECK(c == cls.canonical);
  }
  CHECK(canonical_form(cayley_graph(5))->label() == "L(1,2)");
  CHECK(canonical_form(cayley_graph(4))->label() == "M_3(L(1,4))");
  CHECK(canonical_form(stemmed_rose_graph(4, 3))->label() == "M_3(L(1,4))");
  for (long n = 2; n <= 8; ++n) {
    CHECK(canonical_form(rose_graph(n))->label() == "L(1," + std::to_string(n) + ")");
    for (long d = 2; d <= 8; ++d) {
      const auto c = canonical_form(stemmed_rose_graph(n, d));
      REQUIRE(c.has_value());
      CHECK(c->n == n);
      CHECK(c->d == std::gcd(d, n - 1));
    }
  }
  CHECK_FALSE(canonical_form(cayley_graph(3)).has_value());
  CHECK_FALSE(canonical_form(cayley_graph(6)).has_value());
  CHECK_FALSE(canonical_form(Graph({"a"}, {{"l", 0, 0}})).has_value());
}

TEST_CASE("equal canonical forms decide isomorphism") {
  std::vector<Graph> gs;
  for (long n = 1; n <= 12; ++n) gs.push_back(cayley_graph(n));
  for (long n = 2; n <= 5; ++n)
    for (long d = 2; d <= 5; ++d) gs.push_back(stemmed_rose_graph(n, d));
  for (const auto& a : gs)
    for (const auto& b : gs) {
      const auto ca = canonical_form(a), cb = canonical_form(b);
      if (!ca || !cb) continue;
      const KPOutcome o = kp_decide(a, b).outcome;
      CHECK((o == KPOutcome::Isomorphic) == (*ca == *cb));
    }
}

TEST_CASE("cayley_class") {
  CHECK(cayley_class(7).class_id == CayleyClassId::TrivialK0);
  CHECK(cayley_class(7).canonical->label() == "L(1,2)");
  CHECK(cayley_class(9).class_id == CayleyClassId::Klein4);
  CHECK_FALSE(cayley_class(9).canonical.has_value());
  CHECK(cayley_class(12).class_id == CayleyClassId::ZxZ);
  CHECK(cayley_class(8).canonical->label() == "M_3(L(1,4))");
  CHECK(std::string(to_string(cayley_class(3).class_id)) == "KLEIN4");
  CHECK_THROWS_AS(cayley_class(0), DomainError);
}
