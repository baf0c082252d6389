#include <doctest.h>

#include <random>

#include "eqclass/families.hpp"
#include "eqclass/hypergraph.hpp"
#include "hyper_oracle.hpp"

using namespace eqclass;

namespace {

std::vector<Hypergraph> up_to(int n) {
  std::vector<Hypergraph> out;
  for (int k = 1; k <= n; ++k) {
    auto hs = all_hypergraphs(k);
    out.insert(out.end(), hs.begin(), hs.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("hypergraph") {

TEST_CASE("complete graphs") {
  CHECK(complete_graph(2).edges().size() == 1);
  CHECK(complete_graph(4).edges().size() == 6);
  for (int n = 2; n <= 5; ++n) CHECK(function_of(complete_graph(n)) == make_H(n));
  CHECK_THROWS(complete_graph(1));
}

TEST_CASE("function_of") {
  CHECK(function_of(parse_hypergraph("hg:2:{1}{2}")) == parse_function("x1 | x2"));
  CHECK(function_of(parse_hypergraph("hg:2:")) == BooleanFunction::constant(2, false));
  for (const auto& g : up_to(3)) REQUIRE(function_of(g) == oracle::function_of(g.vertex_count(), g.edges()));
}

TEST_CASE("hypergraph_of") {
  CHECK(hypergraph_of(parse_function("x1 & x2")) == parse_hypergraph("hg:2:{1,2}"));
  CHECK(hypergraph_of(make_H(3)) == complete_graph(3));
  CHECK_THROWS(hypergraph_of(BooleanFunction::constant(2, true)));
  CHECK_THROWS(hypergraph_of(parse_function("!x1")));
}

TEST_CASE("round trip on monotone functions") {
  for (const auto& f : oracle::all_up_to(4)) {
    if (!oracle::monotone(f) || (f.is_constant() && f.at_zero())) continue;
    REQUIRE(function_of(hypergraph_of(f)) == f);
  }
}

TEST_CASE("literal format") {
  const auto g = parse_hypergraph("hg:3:{1,2}{2,3}");
  CHECK(g.vertex_count() == 3);
  CHECK(parse_hypergraph(g.to_string()) == g);
  CHECK_THROWS(parse_hypergraph("hg:2:{1,3}"));
  CHECK_THROWS(parse_hypergraph("hg:2:{}"));
}

TEST_CASE("homomorphism examples") {
  const auto g = parse_hypergraph("hg:3:{1,2}{2,3}");
  const auto self = edge_surjective_hom(g, g);
  REQUIRE(self.verdict == Verdict::Holds);
  CHECK(*self.witness == VertexMap{1, 2, 3});
  CHECK(edge_surjective_hom(complete_graph(2), complete_graph(3)).verdict == Verdict::Fails);
  // The graphs of G^3_5 and G^3_4: no map from the smaller onto the larger.
  const auto g1 = hypergraph_of(make_G(3, 5)), g2 = hypergraph_of(make_G(3, 4));
  CHECK(edge_surjective_hom(g2, g1).verdict == Verdict::Fails);
}

TEST_CASE("homomorphism search agrees with the naive oracle") {
  const auto hs = up_to(3);
  for (const auto& g : hs) {
    for (const auto& h : hs) {
      const auto r = edge_surjective_hom(g, h);
      REQUIRE((r.verdict == Verdict::Holds) == oracle::has_edge_surjective_hom(g, h));
      if (r.witness) REQUIRE(is_edge_surjective_hom(g, h, *r.witness));
    }
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const auto g = random_hypergraph(rng, 5, 6), h = random_hypergraph(rng, 5, 6);
    const auto r = edge_surjective_hom(g, h);
    REQUIRE((r.verdict == Verdict::Holds) == oracle::has_edge_surjective_hom(g, h));
  }
}

TEST_CASE("homomorphisms give minors") {
  const auto hs = up_to(3);
  for (const auto& g : hs) {
    for (const auto& h : hs) {
      const auto r = lemma4_check(g, h);
      REQUIRE(r.hom != Verdict::Inconclusive);
      REQUIRE(r.minor != Verdict::Inconclusive);
      if (r.hom == Verdict::Holds) REQUIRE(r.minor == Verdict::Holds);
    }
  }
}

TEST_CASE("the converse fails: frozen count of disagreeing pairs") {
  const auto hs = up_to(3);
  std::size_t disagree = 0;
  for (const auto& g : hs) {
    for (const auto& h : hs) {
      const auto r = lemma4_check(g, h);
      const bool minor = oracle::minor_leq(oracle::function_of(h.vertex_count(), h.edges()),
                                           oracle::function_of(g.vertex_count(), g.edges()));
      REQUIRE((r.minor == Verdict::Holds) == minor);
      REQUIRE((r.consistent == Verdict::Holds) == ((r.hom == Verdict::Holds) == minor));
      disagree += r.consistent == Verdict::Fails;
    }
  }
  CHECK(hs.size() == 138);
  CHECK(disagree == 5701);
}

TEST_CASE("smallest counterexample to the converse") {
  // x1 is x1 | x2 with x2 identified to x1, but the preimage {1,2} of the
  // edge {1} is not an edge.
  const auto g = parse_hypergraph("hg:2:{1}{2}"), h = parse_hypergraph("hg:1:{1}");
  const auto r = lemma4_check(g, h);
  CHECK(r.minor == Verdict::Holds);
  CHECK(r.hom == Verdict::Fails);
  CHECK(r.consistent == Verdict::Fails);
}

TEST_CASE("consistent instances") {
  CHECK(lemma4_check(complete_graph(2), complete_graph(3)).consistent == Verdict::Holds);
  const auto g = parse_hypergraph("hg:3:{1,2}{2,3}");
  const auto r = lemma4_check(g, g);
  CHECK(r.consistent == Verdict::Holds);
  CHECK(r.hom == Verdict::Holds);
}

}  // TEST_SUITE
