#include "doctest.h"

#include <set>

#include "fbh/hilbert.hpp"
#include "fbh/oracle.hpp"

using namespace fbh;

namespace {

std::set<std::map<oracle::Tuple, long long>> as_set(const std::vector<IntegralBalanced>& gens) {
  std::set<std::map<oracle::Tuple, long long>> out;
  for (const auto& g : gens) out.emplace(g.weights.begin(), g.weights.end());
  return out;
}

template <class T>
std::set<T> to_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("bases for (2,2), (3,3) and (2,4)") {
  auto r = hilbert_basis({2, 2}, 4);
  REQUIRE(std::holds_alternative<HilbertBasis>(r));
  CHECK(as_set(std::get<HilbertBasis>(r).generators) == to_set(oracle::permutation_indicators(2)));

  r = hilbert_basis({3, 3}, 12);
  REQUIRE(std::holds_alternative<HilbertBasis>(r));
  CHECK(as_set(std::get<HilbertBasis>(r).generators) == to_set(oracle::permutation_indicators(3)));

  r = hilbert_basis({2, 4}, 12);
  REQUIRE(std::holds_alternative<HilbertBasis>(r));
  const auto stars = as_set(std::get<HilbertBasis>(r).generators);
  CHECK(stars.size() == 6);
  CHECK(stars == to_set(oracle::star_unions(2, 2)));
}

TEST_CASE("caps below closure report the generators found so far") {
  auto r = hilbert_basis({3, 3}, 6);
  REQUIRE(std::holds_alternative<CapExceeded>(r));
  const auto& c = std::get<CapExceeded>(r);
  CHECK(as_set(c.partial) == to_set(oracle::permutation_indicators(3)));
  CHECK(c.needed_norm == 12);

  r = hilbert_basis({2, 4}, 8);
  REQUIRE(std::holds_alternative<CapExceeded>(r));
  CHECK(as_set(std::get<CapExceeded>(r).partial) == to_set(oracle::star_unions(2, 2)));
}

TEST_CASE("balanced vectors of a given norm") {
  const auto norm3 = balanced_of_norm({3, 3}, 3);
  CHECK(norm3.size() == 6);
  for (const auto& w : norm3) CHECK(is_integral_balanced(w));
  CHECK(balanced_of_norm({2, 3}, 5).empty());
  const auto oracle_all = oracle::balanced_vectors({2, 2}, 4);
  std::size_t count = 0;
  for (long long n = 1; n <= 4; ++n) count += balanced_of_norm({2, 2}, n).size();
  CHECK(count == oracle_all.size());
}

TEST_CASE("birkhoff decomposition") {
  CHECK(birkhoff_decompose({{2, 0}, {0, 2}}) == std::vector<Permutation>{{1, 2}, {1, 2}});
  const auto ones = birkhoff_decompose({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(ones.size() == 3);
  std::vector<std::vector<long long>> sum(3, std::vector<long long>(3));
  for (const auto& p : ones)
    for (int i = 0; i < 3; ++i) ++sum[i][p[i] - 1];
  CHECK(sum == std::vector<std::vector<long long>>(3, std::vector<long long>(3, 1)));
  CHECK(birkhoff_decompose({{2, 1}, {1, 2}}) == std::vector<Permutation>{{1, 2}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(birkhoff_decompose({{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("hall extension") {
  PartiteHypergraph one({1, 1, 2}, {{1, 1, 2}});
  WeightFunction w1;
  w1.add({1, 1, 2}, 1);
  auto r = hall_extend(one, {{1, 1}}, w1);
  REQUIRE(r.matching);
  CHECK(*r.matching == std::vector<Edge>{{1, 1, 2}});

  PartiteHypergraph clash({2, 2, 2}, {{1, 1, 1}, {2, 2, 1}});
  WeightFunction w2;
  w2.add({1, 1, 1}, 1);
  w2.add({2, 2, 1}, 1);
  r = hall_extend(clash, {{1, 1}, {2, 2}}, w2);
  CHECK_FALSE(r.matching);
  CHECK(r.violator.size() == 2);

  // A 2-matching of a tripartite hypergraph lifted by a fourth side of size 3
  // where every edge extends to every new vertex.
  std::vector<Edge> lifted;
  WeightFunction w3;
  for (const Edge& e : std::vector<Edge>{{1, 1, 2}, {2, 2, 1}, {1, 2, 1}})
    for (int j = 1; j <= 3; ++j) {
      lifted.push_back({e[0], e[1], e[2], j});
      w3.add(lifted.back(), 1);
    }
  r = hall_extend(PartiteHypergraph({2, 2, 2, 3}, lifted), {{1, 1, 2}, {2, 2, 1}}, w3);
  REQUIRE(r.matching);
  CHECK(r.matching->size() == 2);
  CHECK(is_matching(*r.matching));
}
