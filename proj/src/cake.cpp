#include "fbh/cake.hpp"

#include <algorithm>
#include <stdexcept>

namespace fbh {

void check_partition(const Partition& p, const std::vector<int>& slices) {
  if (p.size() != slices.size()) throw std::invalid_argument("partition has the wrong number of cakes");
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (static_cast<int>(p[t].size()) != slices[t]) throw std::invalid_argument("cake has the wrong slice count");
    Rational sum = 0;
    for (const auto& x : p[t]) {
      if (x < 0) throw std::invalid_argument("negative slice length");
      sum += x;
    }
    if (sum != 1) throw std::invalid_argument("slice lengths of a cake must sum to 1");
  }
}

namespace {

// Members of `pairs` whose length sum v_j + w_k is maximal.
std::vector<Edge> max_sum(const std::vector<Edge>& pairs, const Partition& p) {
  std::vector<Edge> out;
  Rational best = -1;
  for (const auto& e : pairs) {
    const Rational s = p[0][e[0] - 1] + p[1][e[1] - 1];
    if (s > best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(e);
  }
  return out;
}

std::vector<Edge> merged(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

DivisionInstance instance_2n2_nn(int n) {
  if (n < 2) throw std::invalid_argument("instance needs n >= 2");
  DivisionInstance inst;
  inst.agents = 2 * n - 2;
  inst.slices = {n, n};
  inst.accepts = [n](int agent, const Partition& p) {
    const Rational big(1, n - 1);
    std::vector<Edge> a, b;
    for (int j = 1; j <= n; ++j) a.push_back({j, agent < n - 1 ? j : j % n + 1});
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (p[0][j - 1] >= big && p[1][k - 1] >= big) b.push_back({j, k});
    return merged(b, max_sum(a, p));
  };
  return inst;
}

DivisionInstance instance_nn_2n2(int n) {
  if (n < 2) throw std::invalid_argument("instance needs n >= 2");
  DivisionInstance inst;
  inst.agents = n;
  inst.slices = {n, 2 * n - 2};
  inst.accepts = [n](int agent, const Partition& p) {
    const int i = agent + 1;
    const Rational big(1, n - 1);
    std::vector<Edge> a;
    for (int k = 1; k <= n - 1; ++k) a.push_back({i, k});
    for (int k = n; k <= 2 * n - 2; ++k) a.push_back({i % n + 1, k});
    // The longest pairs of B = {(j, k) : v_j >= 1/(n-1)}.
    std::vector<Edge> b;
    const Rational v_max = *std::max_element(p[0].begin(), p[0].end());
    const Rational w_max = *std::max_element(p[1].begin(), p[1].end());
    if (v_max >= big)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= 2 * n - 2; ++k)
          if (p[0][j - 1] == v_max && p[1][k - 1] == w_max) b.push_back({j, k});
    return merged(b, max_sum(a, p));
  };
  return inst;
}

Placation nu_D(const DivisionInstance& inst, const Partition& p) {
  check_partition(p, inst.slices);
  std::vector<std::vector<Edge>> lists;
  for (int i = 0; i < inst.agents; ++i) {
    lists.push_back(inst.accepts(i, p));
    for (const auto& e : lists.back()) {
      if (e.size() != inst.slices.size()) throw std::logic_error("oracle returned a tuple of the wrong length");
      for (std::size_t t = 0; t < e.size(); ++t)
        if (e[t] < 1 || e[t] > inst.slices[t]) throw std::logic_error("oracle returned an out-of-range tuple");
    }
  }
  int ceiling = inst.agents;
  for (int a : inst.slices) ceiling = std::min(ceiling, a);

  std::vector<std::vector<char>> used;
  for (int a : inst.slices) used.emplace_back(a, 0);
  std::vector<std::pair<int, Edge>> current;
  Placation best;
  auto search = [&](auto&& self, int i) -> void {
    if (static_cast<int>(current.size()) > best.size) {
      best.size = static_cast<int>(current.size());
      best.assignment = current;
    }
    if (best.size == ceiling || i == inst.agents) return;
    if (static_cast<int>(current.size()) + (inst.agents - i) <= best.size) return;
    for (const auto& e : lists[i]) {
      bool free = true;
      for (std::size_t t = 0; t < e.size() && free; ++t) free = !used[t][e[t] - 1];
      if (!free) continue;
      for (std::size_t t = 0; t < e.size(); ++t) used[t][e[t] - 1] = 1;
      current.emplace_back(i, e);
      self(self, i + 1);
      current.pop_back();
      for (std::size_t t = 0; t < e.size(); ++t) used[t][e[t] - 1] = 0;
      if (best.size == ceiling) return;
    }
    self(self, i + 1);
  };
  search(search, 0);
  return best;
}

void for_each_grid_partition(const std::vector<int>& slices, int q,
                             const std::function<bool(const Partition&)>& visit) {
  if (q < 1) throw std::invalid_argument("resolution must be at least 1");
  Partition p;
  for (int a : slices) {
    if (a < 1) throw std::invalid_argument("every cake needs a slice");
    p.emplace_back(a, Rational(0));
  }
  // counts[t] is a composition of q into slices[t] parts.
  std::vector<std::vector<int>> counts;
  for (int a : slices) {
    std::vector<int> c(a, 0);
    c.back() = q;
    counts.push_back(std::move(c));
  }
  // Lexicographic successor: move one unit from the last nonzero part to
  // its left neighbour and dump the rest on the final part.
  auto next_composition = [](std::vector<int>& c) {
    int z = static_cast<int>(c.size()) - 1;
    while (z > 0 && c[z] == 0) --z;
    if (z == 0) return false;
    const int mass = c[z];
    c[z] = 0;
    ++c[z - 1];
    c.back() = mass - 1;
    return true;
  };
  for (;;) {
    for (std::size_t t = 0; t < slices.size(); ++t)
      for (int j = 0; j < slices[t]; ++j) p[t][j] = Rational(counts[t][j], q);
    if (!visit(p)) return;
    std::size_t t = slices.size();
    while (t > 0) {
      if (next_composition(counts[t - 1])) break;
      counts[t - 1].assign(slices[t - 1], 0);
      counts[t - 1].back() = q;
      --t;
    }
    if (t == 0) return;
  }
}

GridResult grid_max(const DivisionInstance& inst, int q) {
  GridResult out;
  for_each_grid_partition(inst.slices, q, [&](const Partition& p) {
    ++out.points;
    const int v = nu_D(inst, p).size;
    if (v > out.best || out.argmax.empty()) {
      out.best = v;
      out.argmax = p;
    }
    return true;
  });
  return out;
}

bool hungry_at(const DivisionInstance& inst, const Partition& p) {
  for (int i = 0; i < inst.agents; ++i) {
    const auto list = inst.accepts(i, p);
    const bool ok = std::any_of(list.begin(), list.end(), [&](const Edge& e) {
      for (std::size_t t = 0; t < e.size(); ++t)
        if (p[t][e[t] - 1] <= 0) return false;
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace fbh
