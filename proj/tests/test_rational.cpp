#include "doctest.h"

#include <random>

#include "fbh/lp.hpp"
#include "fbh/rational.hpp"

using namespace fbh;

TEST_CASE("rationals stay in lowest terms") {
  const Rational r = Rational(6) / Rational(-4);
  CHECK(to_string(r) == "-3/2");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(rank(RationalMatrix(2, 2)) == 0);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rank equals rank of the transpose, null space has the right size") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(entry(rng), 1 + rng() % 3);
    const auto k = rank(m);
    CHECK(k == rank(m.transpose()));
    const auto basis = null_space(m);
    CHECK(basis.size() == c - k);
    for (const auto& x : basis)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * x[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("lp examples") {
  LPProblem p(1, Sense::Maximize);
  p.objective = {1};
  p.add({1}, Relation::LessEqual, 1);
  auto r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 1);

  LPProblem q(1);
  q.add({1}, Relation::GreaterEqual, 1);
  q.add({1}, Relation::LessEqual, 0);
  CHECK(lp_solve(q).status == LPStatus::Infeasible);

  LPProblem s(2, Sense::Maximize);
  s.objective = {1, 1};
  s.add({1, 2}, Relation::LessEqual, 2);
  s.add({2, 1}, Relation::LessEqual, 2);
  r = lp_solve(s);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Rational(4, 3));
  CHECK(r.point == std::vector<Rational>{Rational(2, 3), Rational(2, 3)});

  LPProblem u(1, Sense::Maximize);
  u.objective = {1};
  CHECK(lp_solve(u).status == LPStatus::Unbounded);

  LPProblem bad(2);
  bad.add({1}, Relation::Equal, 1);
  CHECK_THROWS_AS(lp_solve(bad), std::invalid_argument);
}

TEST_CASE("strong duality on random packing problems") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
    std::vector<std::vector<int>> a(m, std::vector<int>(n));
    std::vector<int> b(m), c(n);
    for (auto& row : a)
      for (auto& x : row) x = rng() % 4;
    for (auto& x : b) x = 1 + rng() % 5;
    for (auto& x : c) x = 1 + rng() % 5;
    // Every variable must appear somewhere, or the primal is unbounded.
    for (std::size_t j = 0; j < n; ++j) a[rng() % m][j] += 1;

    LPProblem primal(n, Sense::Maximize);
    for (std::size_t j = 0; j < n; ++j) primal.objective[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) primal.add({a[i].begin(), a[i].end()}, Relation::LessEqual, b[i]);
    LPProblem dual(m, Sense::Minimize);
    for (std::size_t i = 0; i < m; ++i) dual.objective[i] = b[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = a[i][j];
      dual.add(col, Relation::GreaterEqual, c[j]);
    }
    const auto p = lp_solve(primal), d = lp_solve(dual);
    REQUIRE(p.status == LPStatus::Optimal);
    REQUIRE(d.status == LPStatus::Optimal);
    CHECK(p.value == d.value);
  }
}
