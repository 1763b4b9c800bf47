#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fbh/constructions.hpp"
#include "fbh/oracle.hpp"
#include "fbh/topology.hpp"

using namespace fbh;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return Graph(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("independence complexes") {
  CHECK(independence_complex(Graph(3, {})).facets() == std::vector<Face>{{0, 1, 2}});
  CHECK(independence_complex(Graph(2, {{0, 1}})).facets() == std::vector<Face>{{0}, {1}});
  CHECK(independence_complex(Graph(3, {{0, 1}, {1, 2}})).facets() == std::vector<Face>{{0, 2}, {1}});
}

TEST_CASE("line graphs and matching complexes") {
  Multigraph one{1, 1, {{1, 1, 1}}};
  CHECK(line_graph(one).edges().empty());
  Multigraph parallel{1, 1, {{1, 1, 1}, {1, 1, 2}}};
  CHECK(line_graph(parallel).edges().size() == 1);
  Multigraph path{2, 1, {{1, 1, 1}, {2, 1, 2}}};
  CHECK(line_graph(path).edges().size() == 1);

  Multigraph two{2, 2, {{1, 1, 1}, {2, 2, 2}}};
  CHECK(matching_complex(two).facets() == std::vector<Face>{{0, 1}});
  CHECK(matching_complex(parallel).facets() == std::vector<Face>{{0}, {1}});
  Multigraph c4{2, 2, {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 1, 4}}};
  CHECK(matching_complex(c4).facets() == std::vector<Face>{{0, 2}, {1, 3}});
}

TEST_CASE("betti numbers") {
  const SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(betti(circle, 1) == 1);
  CHECK(betti(circle, 0) == 0);
  CHECK(betti(circle, -1) == 0);
  const SimplicialComplex two_points(2, {{0}, {1}});
  CHECK(betti(two_points, 0) == 1);
  const SimplicialComplex simplex(3, {{0, 1, 2}});
  for (int j = -1; j <= 3; ++j) CHECK(betti(simplex, j) == 0);
  CHECK(betti(SimplicialComplex(0, {{}}), -1) == 1);
  CHECK(betti(SimplicialComplex(), -1) == 0);
}

TEST_CASE("reduced Euler characteristic from faces equals the Betti alternating sum") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = independence_complex(random_graph(6 + trial % 3, 0.35, rng));
    long long from_faces = -1;
    for (int size = 1; size <= c.dimension() + 1; ++size)
      from_faces += (size % 2 ? 1 : -1) * static_cast<long long>(c.faces_of_size(size).size());
    const auto b = betti_numbers(c);
    long long from_homology = 0;
    for (std::size_t i = 0; i < b.size(); ++i) from_homology += (i % 2 ? 1 : -1) * b[i];
    // b[0] is dimension -1, whose sign is -1.
    CHECK(from_faces == from_homology);
  }
}

TEST_CASE("eta examples") {
  CHECK(eta(SimplicialComplex(2, {{0}, {1}}), 5) == EtaValue::exactly(1));
  CHECK(eta(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}), 5) == EtaValue::exactly(2));
  CHECK(eta(SimplicialComplex(3, {{0, 1, 2}}), 10) == EtaValue::lower_bound(10));
  CHECK(eta(SimplicialComplex(), 5) == EtaValue::exactly(0));
  CHECK(eta(SimplicialComplex(0, {{}}), 5) == EtaValue::exactly(0));
}

TEST_CASE("eta_independence agrees with the complex route") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(4 + trial % 5, 0.4, rng);
    CHECK(eta_independence(g, 5) == eta(independence_complex(g), 5));
  }
}

TEST_CASE("psi examples") {
  CHECK(psi(Graph(2, {{0, 1}})) == GameValue::finite(1));
  CHECK(psi(Graph(3, {{0, 1}, {1, 2}})) == GameValue::finite(1));
  CHECK(psi(Graph(0, {})) == GameValue::finite(0));
  CHECK(psi(Graph(1, {})) == GameValue::infinity());
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    CHECK(psi(Graph(2 * m, edges)) == GameValue::finite(m));
  }
}

TEST_CASE("psi is invariant under relabeling and bounded by eta") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 3;
    const auto g = random_graph(n, 0.45, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = psi(g);
    CHECK(psi(relabel(g, perm)) == p);
    const auto e = eta(independence_complex(g), 6);
    if (p.infinite) CHECK(e.at_least);
    else CHECK((e.at_least || e.value >= p.value));
  }
}

TEST_CASE("CON certificate examples") {
  Multigraph cell{1, 1, {{1, 1, 1}}};
  CHECK(con_bound({2}, 1) == 1);
  CHECK(con_certificate(cell, {2}, 1).at_least(1));

  Multigraph grid{2, 2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 3}, {2, 2, 4}}};
  CHECK(con_bound({1, 1, 1, 1}, 1) == 1);
  CHECK(con_certificate(grid, {1, 1, 1, 1}, 1).at_least(1));

  Multigraph diagonal{3, 3, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}};
  CHECK(con_bound({2, 2, 2}, 1) == 2);
  const auto v = con_certificate(diagonal, {2, 2, 2}, 1);
  CHECK(v.at_least(2));
  CHECK_FALSE(psi(line_graph(diagonal)) < v);

  CHECK_THROWS_AS(con_certificate(cell, {3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(con_certificate(grid, {2, 2, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("hall check") {
  auto r = hall_check(pasch().graph, 1);
  CHECK(r.all_k_pass);
  REQUIRE(r.matching);
  CHECK(r.matching->size() == 1);

  r = hall_check(drisko(3).graph, 2);
  CHECK(r.all_k_pass);
  REQUIRE(r.matching);
  CHECK(r.matching->size() == 2);
  CHECK(is_matching(*r.matching));

  const PartiteHypergraph lonely({2, 2, 2}, {{1, 1, 1}, {1, 2, 2}});
  r = hall_check(lonely, 0);
  CHECK_FALSE(r.all_k_pass);
  REQUIRE(r.failing_k);
  CHECK(*r.failing_k == std::vector<int>{2});
  CHECK_FALSE(r.matching);
}

TEST_CASE("psi matches plain minimax") {
  auto check = [](const Graph& g) {
    const int brute = oracle::game_value(g.vertex_count(), g.edges());
    const auto p = psi(g);
    CAPTURE(g.edges().size());
    if (brute == -1) CHECK(p.infinite);
    else CHECK(p == GameValue::finite(brute));
  };
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      check(Graph(n, edges));
    }
  }
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 3;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(pairs.size(), 5 + trial % 4));
    check(Graph(n, pairs));
  }
}
