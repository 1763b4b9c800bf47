#include "doctest.h"

#include <random>

#include "fbh/dinterval.hpp"
#include "fbh/oracle.hpp"

using namespace fbh;

namespace {

DInterval two(Rational a, Rational b, Rational c, Rational d) { return DInterval{{{a, b}, {c, d}}}; }

}  // namespace

TEST_CASE("validation and disjointness") {
  CHECK_THROWS_AS(check_dinterval(two(Rational(1, 2), Rational(1, 4), 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(check_dinterval(two(0, 2, 0, 1)), std::invalid_argument);
  CHECK(disjoint(two(0, Rational(1, 2), 0, Rational(1, 2)), two(Rational(1, 2), 1, Rational(1, 2), 1)));
  CHECK_FALSE(disjoint(two(0, Rational(1, 2), 0, Rational(1, 2)), two(Rational(1, 2), 1, 0, 1)));
}

TEST_CASE("covers") {
  const std::vector<DInterval> one{two(0, Rational(1, 2), Rational(1, 2), 1)};
  CHECK_FALSE(coverable(one, {0, 0}));
  const auto c = coverable(one, {1, 0});
  REQUIRE(c);
  REQUIRE((*c)[0].size() == 1);
  CHECK(one[0].parts[0].contains((*c)[0][0]));
  CHECK((*c)[1].empty());

  const std::vector<DInterval> apart{two(0, Rational(1, 4), 0, Rational(1, 4)),
                                     two(Rational(1, 2), 1, Rational(1, 2), 1)};
  const auto d = coverable(apart, {1, 1});
  REQUIRE(d);
  CHECK((*d)[0].size() + (*d)[1].size() == 2);
  CHECK_FALSE(coverable(apart, {1, 0}));
}

TEST_CASE("rainbow matchings") {
  DIntervalFamilies singles{2, {}};
  for (int i = 0; i < 4; ++i)
    singles.families.push_back({two(Rational(i, 4), Rational(i + 1, 4), Rational(i, 4), Rational(i + 1, 4))});
  const auto m = rainbow_matching(singles, 4);
  REQUIRE(m);
  CHECK(m->size() == 4);

  const auto same = two(0, 1, 0, 1);
  CHECK_FALSE(rainbow_matching(DIntervalFamilies{2, {{same}, {same}}}, 2));
}

TEST_CASE("premise check") {
  CHECK(im_premise_check(DIntervalFamilies{2, {}}, {2, 2}));
  const auto x = two(0, Rational(1, 2), 0, Rational(1, 2));
  CHECK_FALSE(im_premise_check(DIntervalFamilies{2, {{x}}}, {2, 1}));
  CHECK(im_premise_check(DIntervalFamilies{2, {{x}}}, {1, 1}));
}

TEST_CASE("uncoverable random families have m + 1 disjoint members") {
  std::mt19937 rng(23);
  int seen = 0;
  for (int trial = 0; trial < 3000 && seen < 30; ++trial) {
    std::vector<DInterval> family;
    const int size = 2 + rng() % 5;
    for (int i = 0; i < size; ++i) {
      const int a = rng() % 8, b = rng() % 8;
      family.push_back(two(Rational(a, 8), Rational(a + 1, 8), Rational(b, 8), Rational(b + 1, 8)));
    }
    if (coverable(family, {1, 1})) continue;
    ++seen;
    std::vector<std::vector<std::pair<Rational, Rational>>> plain;
    for (const auto& x : family) plain.push_back({{x.parts[0].lo, x.parts[0].hi}, {x.parts[1].lo, x.parts[1].hi}});
    CHECK(oracle::disjoint_family_size(plain) >= 2);
    CHECK(rainbow_matching(DIntervalFamilies{2, {family, family}}, 2));
  }
  CHECK(seen == 30);
}
