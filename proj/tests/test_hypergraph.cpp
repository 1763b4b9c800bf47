#include "doctest.h"

#include "fbh/constructions.hpp"
#include "fbh/hypergraph.hpp"
#include "fbh/oracle.hpp"

using namespace fbh;

namespace {

std::map<oracle::Tuple, Rational> plain(const WeightFunction& f) { return {f.weights().begin(), f.weights().end()}; }

}  // namespace

TEST_CASE("construction rejects malformed hypergraphs") {
  CHECK_THROWS_AS(PartiteHypergraph({2, 0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("balanced certificate examples") {
  const auto p = pasch().graph;
  const auto f = balanced_certificate(p);
  REQUIRE(f);
  CHECK(f->support() == p.edges());
  for (const auto& [e, w] : f->weights()) CHECK(w == Rational(1, 4));
  for (const auto& side : degrees(p, *f))
    for (const auto& d : side) CHECK(d == Rational(1, 2));

  const PartiteHypergraph single({1, 1, 1}, {{1, 1, 1}});
  const auto g = balanced_certificate(single);
  REQUIRE(g);
  CHECK(g->at({1, 1, 1}) == 1);

  CHECK_FALSE(balanced_certificate(PartiteHypergraph({2, 2}, {{1, 1}})));
  CHECK_FALSE(balanced_certificate(PartiteHypergraph({2, 2}, {})));
}

TEST_CASE("fractional matching number") {
  CHECK(nu_star(pasch().graph) == 2);
  CHECK(nu_star(PartiteHypergraph({3, 3}, {})) == 0);
  CHECK(nu_star(drisko(3).graph) == 3);
}

TEST_CASE("matching number against the brute-force oracle") {
  CHECK(nu(pasch().graph) == 1);
  CHECK(nu(drisko(3).graph) == 2);
  CHECK(nu(nnn_tight(5).graph) == 3);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::vector<int> sides{1 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed % 3), 3};
    const auto h = random_balanced(sides, seed, 1 + seed % 3).graph;
    const auto m = maximum_matching(h);
    CHECK(is_matching(m));
    for (const auto& e : m) CHECK(h.contains(e));
    CHECK(static_cast<int>(m.size()) == oracle::matching_number(h.edges()));
  }
}

TEST_CASE("neighborhood multigraph") {
  const auto p = pasch().graph;
  CHECK(neighborhood(p, {}).edges.empty());
  const auto n1 = neighborhood(p, {1});
  REQUIRE(n1.edges.size() == 2);
  CHECK(n1.edges[0] == LabeledEdge{1, 1, 1});
  CHECK(n1.edges[1] == LabeledEdge{2, 2, 1});
  const auto n13 = neighborhood(drisko(3).graph, {1, 3});
  CHECK(n13.edges.size() == 6);
  for (const auto& e : n13.edges) CHECK((e.label == 1 || e.label == 3));
}

TEST_CASE("random balanced designs") {
  auto wh = random_balanced({3, 3}, 5, 1);
  CHECK(wh.graph.size() == 3);
  CHECK(is_matching(wh.graph.edges()));
  for (const auto& [e, w] : wh.weights.weights()) CHECK(w == 1);

  wh = random_balanced({2, 2, 2}, 9, 2);
  CHECK(oracle::constant_degrees({2, 2, 2}, plain(wh.weights)));
  CHECK(wh.weights.total() == 4);

  wh = random_balanced({2, 4}, 3, 1);
  CHECK(wh.graph.size() == 4);
  for (const auto& side : degrees(wh.graph, wh.weights)) CHECK(side == std::vector<Rational>(side.size(), side[0]));
  CHECK(degrees(wh.graph, wh.weights)[0][0] == 2);

  CHECK(random_balanced({2, 3, 4}, 42, 2).graph == random_balanced({2, 3, 4}, 42, 2).graph);
}

TEST_CASE("nu never exceeds nu* and balanced means nu* = min side") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const std::vector<int> sides{2 + static_cast<int>(seed % 3), 3, 2 + static_cast<int>(seed % 2)};
    const auto h = random_balanced(sides, seed, 2).graph;
    CHECK(nu_star(h) == *std::min_element(sides.begin(), sides.end()));
    CHECK(Rational(nu(h)) <= nu_star(h));
    CHECK(balanced_certificate(h));
  }
}
