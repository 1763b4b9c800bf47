#include "doctest.h"

#include "fbh/cake.hpp"

using namespace fbh;

namespace {

Partition halves() { return {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}; }

DivisionInstance fixed(int agents, std::vector<int> slices, std::vector<std::vector<Edge>> lists) {
  DivisionInstance inst;
  inst.agents = agents;
  inst.slices = std::move(slices);
  inst.accepts = [lists](int i, const Partition&) { return lists[i]; };
  return inst;
}

DivisionInstance everything(int agents, int a, int b) {
  std::vector<Edge> all;
  for (int j = 1; j <= a; ++j)
    for (int k = 1; k <= b; ++k) all.push_back({j, k});
  return fixed(agents, {a, b}, std::vector<std::vector<Edge>>(agents, all));
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(check_partition(halves(), {2, 2}));
  CHECK_THROWS_AS(check_partition(halves(), {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(check_partition({{1, 0}, {Rational(1, 2), Rational(1, 3)}}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(check_partition({{2, -1}, {1, 0}}, {2, 2}), std::invalid_argument);
}

TEST_CASE("acceptance lists of the (2n-2; n, n) instance") {
  const auto inst = instance_2n2_nn(2);
  CHECK(inst.agents == 2);
  CHECK(inst.accepts(0, halves()) == std::vector<Edge>{{1, 1}, {2, 2}});
  CHECK(inst.accepts(1, halves()) == std::vector<Edge>{{1, 2}, {2, 1}});
  const Partition corner{{1, 0}, {1, 0}};
  const auto l = inst.accepts(0, corner);
  CHECK(std::find(l.begin(), l.end(), Edge{1, 1}) != l.end());
}

TEST_CASE("acceptance lists of the (n; n, 2n-2) instance") {
  const auto inst = instance_nn_2n2(2);
  CHECK(inst.slices == std::vector<int>{2, 2});
  const Partition p{{Rational(1, 3), Rational(2, 3)}, {Rational(1, 4), Rational(3, 4)}};
  const auto l = inst.accepts(0, p);
  CHECK(std::find(l.begin(), l.end(), Edge{2, 2}) != l.end());
  const auto three = instance_nn_2n2(3);
  const Partition q{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}, {1, 0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (const auto& e : three.accepts(i, q)) CHECK(q[1][e[1] - 1] > 0);
}

TEST_CASE("nu_D examples") {
  CHECK(nu_D(fixed(1, {1, 1}, {{{1, 1}}}), {{1}, {1}}).size == 1);
  CHECK(nu_D(instance_2n2_nn(2), halves()).size == 1);
  const auto two = nu_D(fixed(2, {2, 2}, {{{1, 1}}, {{2, 2}}}), halves());
  CHECK(two.size == 2);
  CHECK(two.assignment.size() == 2);
}

TEST_CASE("grid maxima") {
  CHECK(grid_max(instance_2n2_nn(2), 8).best == 1);
  CHECK(grid_max(instance_nn_2n2(2), 8).best == 1);
  CHECK(grid_max(everything(3, 3, 4), 3).best == 3);
  CHECK(grid_max(everything(2, 2, 2), 5).best == 2);
}

TEST_CASE("grid enumeration visits every composition once") {
  long long count = 0;
  for_each_grid_partition({2, 3}, 4, [&](const Partition& p) {
    check_partition(p, {2, 3});
    ++count;
    return true;
  });
  CHECK(count == 5 * 15);
  long long stopped = 0;
  for_each_grid_partition({2, 2}, 4, [&](const Partition&) { return ++stopped < 3; });
  CHECK(stopped == 3);
}

TEST_CASE("hungriness at every grid partition") {
  for (int n : {2, 3})
    for (const auto& inst : {instance_2n2_nn(n), instance_nn_2n2(n)})
      for_each_grid_partition(inst.slices, 4, [&](const Partition& p) {
        CHECK(hungry_at(inst, p));
        return true;
      });
}
