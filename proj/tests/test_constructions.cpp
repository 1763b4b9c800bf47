#include "doctest.h"

#include <set>

#include "fbh/constructions.hpp"
#include "fbh/oracle.hpp"
#include "fbh/topology.hpp"

using namespace fbh;

namespace {

std::map<oracle::Tuple, Rational> plain(const WeightFunction& f) { return {f.weights().begin(), f.weights().end()}; }

bool intersecting(const PartiteHypergraph& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      if (is_matching({h.edges()[i], h.edges()[j]})) return false;
  return true;
}

void check_exact(const WeightedHypergraph& wh, int expected_nu) {
  CHECK(oracle::constant_degrees(wh.graph.sides(), plain(wh.weights)));
  check_weights(wh.graph, wh.weights);
  CHECK(nu(wh.graph) == expected_nu);
  CHECK(oracle::matching_number(wh.graph.edges()) == expected_nu);
}

}  // namespace

TEST_CASE("pasch and nnn_tight") {
  const auto p = pasch();
  CHECK(p.graph.edges() == std::vector<Edge>{{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
  check_exact(p, 1);
  check_exact(nnn_tight(2), 1);
  const auto three = nnn_tight(3);
  check_exact(three, 2);
  CHECK(three.graph.size() == 5);
  CHECK(three.graph.contains({3, 3, 3}));
  const auto four = nnn_tight(4);
  check_exact(four, 2);
  CHECK(four.graph.size() == 8);
}

TEST_CASE("drisko") {
  const auto two = drisko(2);
  CHECK(two.graph.sides() == std::vector<int>{2, 2, 2});
  CHECK(two.graph.size() == 4);
  check_exact(two, 1);
  const auto three = drisko(3);
  CHECK(three.graph.size() == 12);
  check_exact(three, 2);
  for (int n = 2; n <= 5; ++n) {
    const auto deg = degrees(drisko(n).graph, drisko(n).weights);
    for (const auto& d : deg[0]) CHECK(d == n);
    for (const auto& d : deg[1]) CHECK(d == 2 * n - 2);
    for (const auto& d : deg[2]) CHECK(d == 2 * n - 2);
  }
  CHECK_THROWS_AS(drisko(1), std::invalid_argument);
}

TEST_CASE("mlessn") {
  const auto a = mlessn(4, 5);
  CHECK(nu(a.graph) <= 4);
  const auto b = mlessn(7, 8);
  CHECK(nu(b.graph) <= 6);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{4, 5}, {7, 8}, {6, 7}}) {
    const auto wh = mlessn(k, n);
    const auto deg = degrees(wh.graph, wh.weights);
    for (const auto& d : deg[0]) CHECK(d == 1);
    for (int t = 1; t <= 2; ++t)
      for (const auto& d : deg[t]) CHECK(d == Rational(k, n));
    CHECK(oracle::matching_number(wh.graph.edges()) == nu(wh.graph));
  }
  CHECK_THROWS_AS(mlessn(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(mlessn(5, 5), std::invalid_argument);
}

TEST_CASE("mlessn2") {
  check_exact(mlessn2(3, 4), 2);
  check_exact(mlessn2(4, 6), 3);
  check_exact(mlessn2(3, 5), 3);
  CHECK_THROWS_AS(mlessn2(7, 10), std::invalid_argument);
}

TEST_CASE("main_negative") {
  const auto a = main_negative(5, 2, 8);
  std::set<Rational> values;
  for (const auto& [e, w] : a.weights.weights()) values.insert(w);
  CHECK(values.count(Rational(1, 8)));
  CHECK(values.count(Rational(5, 8)));
  CHECK(oracle::constant_degrees(a.graph.sides(), plain(a.weights)));
  CHECK(nu(a.graph) <= 4);
  CHECK(oracle::matching_number(a.graph.edges()) == nu(a.graph));
  const auto b = main_negative(5, 2, 10);
  CHECK(oracle::constant_degrees(b.graph.sides(), plain(b.weights)));
  CHECK(nu(b.graph) <= 4);
  CHECK_THROWS_AS(main_negative(5, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(main_negative(4, 2, 8), std::invalid_argument);
}

TEST_CASE("zeta counterexample") {
  const auto z = zeta_counterexample(3);
  CHECK(z.graph.sides() == std::vector<int>{3, 4});
  CHECK(z.weights.at({1, 1}) == Rational(3, 4));
  CHECK(z.weights.at({1, 3}) == Rational(1, 4));
  const auto deg = degrees(z.graph, z.weights);
  for (const auto& d : deg[0]) CHECK(d == 2);
  for (const auto& d : deg[1]) CHECK(d == Rational(3, 2));
  const auto e = eta(matching_complex(as_multigraph(z.graph)), 4);
  CHECK_FALSE(e.at_least);
  CHECK(e.value <= 2);
  CHECK_THROWS_AS(zeta_counterexample(2), std::invalid_argument);
}

TEST_CASE("truncated projective planes") {
  CHECK(truncated_projective(3) == pasch().graph);
  for (int q : {3, 4, 6}) {
    const auto h = truncated_projective(q);
    CHECK(h.sides() == std::vector<int>(q, q - 1));
    CHECK(h.size() == static_cast<std::size_t>((q - 1) * (q - 1)));
    CHECK(intersecting(h));
    CHECK(balanced_certificate(h));
    CHECK(nu(h) == 1);
  }
  CHECK_THROWS_AS(truncated_projective(5), std::invalid_argument);
}

TEST_CASE("conjecture constructions have nu = 2") {
  const std::vector<std::pair<int, int>> cases{{3, 1}, {4, 2}, {4, 3}, {5, 4}, {6, 1}, {7, 2}};
  for (auto [n, variant] : cases) {
    const auto h = conj_nn(n, variant);
    CAPTURE(n);
    CAPTURE(variant);
    CHECK(h.sides() == std::vector<int>(n, n));
    CHECK(balanced_certificate(h));
    CHECK(nu(h) == 2);
  }
  CHECK_THROWS_AS(conj_nn(5, 1), std::invalid_argument);
}
