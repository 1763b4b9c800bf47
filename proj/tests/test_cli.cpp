#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "fbh/constructions.hpp"
#include "fbh/io.hpp"
#include "fbh/search.hpp"
#include "fbh/verify.hpp"

using namespace fbh;

TEST_CASE("exhaustive bm search") {
  auto r = bm_search_exhaustive({2, 2});
  CHECK(r.exhaustive);
  CHECK(r.min_nu == 2);
  r = bm_search_exhaustive({2, 2, 2});
  REQUIRE(r.min_nu);
  CHECK(*r.min_nu == 1);
  REQUIRE(r.witness);
  CHECK(nu(*r.witness) == 1);
  CHECK(r.witness->size() == 4);
  CHECK(balanced_certificate(*r.witness));
  CHECK_THROWS_AS(bm_search_exhaustive({2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(bm_search_exhaustive({3, 3, 3}), std::invalid_argument);
}

TEST_CASE("sampled bm search finds Pasch plus an edge at (3,3,3)") {
  SampleOptions o;
  o.seed = 1;
  o.trials = 10000;
  const auto r = bm_search_sampled({3, 3, 3}, o);
  CHECK_FALSE(r.exhaustive);
  REQUIRE(r.min_nu);
  CHECK(*r.min_nu == 2);
  CHECK(nu(*r.witness) == 2);
  CHECK(balanced_certificate(*r.witness));
}

TEST_CASE("sampling never goes below the exhaustive value and is thread-independent") {
  SampleOptions o;
  o.seed = 99;
  o.trials = 600;
  o.checkpoint_every = 250;
  const auto one = bm_search_sampled({2, 2, 2}, o);
  o.threads = 3;
  const auto three = bm_search_sampled({2, 2, 2}, o);
  CHECK(one.min_nu == three.min_nu);
  CHECK(one.nu_histogram == three.nu_histogram);
  CHECK(one.witness == three.witness);
  REQUIRE(one.min_nu);
  CHECK(*one.min_nu >= *bm_search_exhaustive({2, 2, 2}).min_nu);
}

TEST_CASE("checkpoint resume matches an uninterrupted run") {
  const auto path = (std::filesystem::temp_directory_path() / "fbh_test_checkpoint.json").string();
  std::filesystem::remove(path);
  SampleOptions o;
  o.seed = 5;
  o.trials = 400;
  o.checkpoint = path;
  o.checkpoint_every = 100;
  SampleOptions half = o;
  half.trials = 200;
  bm_search_sampled({2, 3, 3}, half);
  const auto resumed = bm_search_sampled({2, 3, 3}, o);
  std::filesystem::remove(path);
  o.checkpoint.clear();
  const auto straight = bm_search_sampled({2, 3, 3}, o);
  CHECK(resumed.nu_histogram == straight.nu_histogram);
  CHECK(resumed.min_nu == straight.min_nu);
  CHECK(resumed.balanced == straight.balanced);
}

TEST_CASE("json round trips") {
  const auto h = drisko(3).graph;
  CHECK(io::hypergraph_from(io::to_json(h)) == h);
  const auto f = pasch().weights;
  CHECK(io::weights_from(io::to_json(f)) == f);
  const SimplicialComplex c(4, {{0, 1}, {2, 3}, {1, 2}});
  CHECK(io::complex_from(io::to_json(c)) == c);
  const Graph g(4, {{0, 1}, {2, 3}});
  CHECK(io::graph_from(io::to_json(g)).edges() == g.edges());
  CHECK(io::rational_from(io::rational_json(Rational(-7, 3))) == Rational(-7, 3));
  CHECK_THROWS(io::hypergraph_from(io::Json::parse(R"({"sides":[2],"edges":[[3]]})")));
}

TEST_CASE("verify runner") {
  CHECK(verify::check_ids().size() == 11);
  verify::Options o;
  auto r = verify::run_check("pasch", o);
  CHECK(r.pass);
  CHECK(r.id == "pasch");
  o.mutant = true;
  r = verify::run_check("pasch", o);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.failures.empty());
  const auto j = verify::to_json(r);
  for (const char* key : {"claim", "parameters", "expected", "got", "pass"}) CHECK(j.contains(key));
  CHECK_THROWS_AS(verify::run_check("nope", o), std::invalid_argument);
}
