#include "fbh/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace fbh::oracle {

int matching_number(const std::vector<Tuple>& edges) {
  std::vector<std::set<int>> used(edges.empty() ? 0 : edges[0].size());
  int best = 0;
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int size) {
    best = std::max(best, size);
    if (i == edges.size() || size + static_cast<int>(edges.size() - i) <= best) return;
    const Tuple& e = edges[i];
    bool free = true;
    for (std::size_t t = 0; t < e.size(); ++t)
      if (used[t].count(e[t])) free = false;
    if (free) {
      for (std::size_t t = 0; t < e.size(); ++t) used[t].insert(e[t]);
      go(i + 1, size + 1);
      for (std::size_t t = 0; t < e.size(); ++t) used[t].erase(e[t]);
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

std::vector<std::vector<Rational>> degree_table(const std::vector<int>& sides, const std::map<Tuple, Rational>& f) {
  std::vector<std::vector<Rational>> deg;
  for (int a : sides) deg.emplace_back(a, Rational(0));
  for (const auto& [e, w] : f)
    for (std::size_t t = 0; t < sides.size(); ++t) deg[t][e[t] - 1] += w;
  return deg;
}

bool constant_degrees(const std::vector<int>& sides, const std::map<Tuple, Rational>& f) {
  bool nonzero = false;
  for (const auto& [e, w] : f) {
    if (w < 0 || e.size() != sides.size()) return false;
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e[t] < 1 || e[t] > sides[t]) return false;
    if (w > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (const auto& side : degree_table(sides, f))
    for (const auto& x : side)
      if (x != side[0]) return false;
  return true;
}

std::vector<std::map<Tuple, long long>> permutation_indicators(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::map<Tuple, long long>> out;
  do {
    std::map<Tuple, long long> w;
    for (int i = 0; i < n; ++i) w[{i + 1, p[i]}] = 1;
    out.push_back(std::move(w));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::map<Tuple, long long>> star_unions(int n, int s) {
  // centre[j] = left vertex owning right vertex j; each centre owns s of them.
  std::vector<std::map<Tuple, long long>> out;
  std::vector<int> centre(n * s, 0), load(n, 0);
  std::function<void(int)> go = [&](int j) {
    if (j == n * s) {
      std::map<Tuple, long long> w;
      for (int r = 0; r < n * s; ++r) w[{centre[r] + 1, r + 1}] = 1;
      out.push_back(std::move(w));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (load[c] == s) continue;
      ++load[c];
      centre[j] = c;
      go(j + 1);
      --load[c];
    }
  };
  go(0);
  return out;
}

std::vector<std::map<Tuple, long long>> balanced_vectors(const std::vector<int>& sides, long long cap) {
  std::vector<Tuple> coords(1, Tuple{});
  for (int a : sides) {
    std::vector<Tuple> next;
    for (const auto& c : coords)
      for (int v = 1; v <= a; ++v) {
        Tuple e = c;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    coords = std::move(next);
  }
  std::vector<std::map<Tuple, long long>> out;
  std::vector<long long> x(coords.size(), 0);
  std::function<void(std::size_t, long long)> go = [&](std::size_t i, long long left) {
    if (i == coords.size()) {
      std::map<Tuple, Rational> f;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (x[k]) f[coords[k]] = x[k];
      if (!constant_degrees(sides, f)) return;
      std::map<Tuple, long long> w;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (x[k]) w[coords[k]] = x[k];
      out.push_back(std::move(w));
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      x[i] = v;
      go(i + 1, left - v);
    }
    x[i] = 0;
  };
  go(0, cap);
  return out;
}

bool decomposes(const std::map<Tuple, long long>& w, const std::vector<std::map<Tuple, long long>>& gens) {
  std::set<std::map<Tuple, long long>> dead;
  std::function<bool(const std::map<Tuple, long long>&)> go = [&](const std::map<Tuple, long long>& rest) {
    if (rest.empty()) return true;
    if (dead.count(rest)) return false;
    // Some generator must cover the smallest remaining coordinate.
    const Tuple& first = rest.begin()->first;
    for (const auto& g : gens) {
      if (!g.count(first)) continue;
      bool fits = true;
      for (const auto& [e, x] : g) {
        auto it = rest.find(e);
        if (it == rest.end() || it->second < x) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      auto smaller = rest;
      for (const auto& [e, x] : g)
        if ((smaller[e] -= x) == 0) smaller.erase(e);
      if (go(smaller)) return true;
    }
    dead.insert(rest);
    return false;
  };
  return go(w);
}

int disjoint_family_size(const std::vector<std::vector<std::pair<Rational, Rational>>>& members) {
  const std::size_t n = members.size();
  auto meets = [&](std::size_t a, std::size_t b) {
    for (std::size_t t = 0; t < members[a].size(); ++t) {
      const auto& [lo1, hi1] = members[a][t];
      const auto& [lo2, hi2] = members[b][t];
      if (std::max(lo1, lo2) < std::min(hi1, hi2)) return true;
    }
    return false;
  };
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && meets(a, b)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

namespace {

// Vertices are kept as a list of live ids; edges refer to original ids.
int play(std::vector<int> live, std::vector<std::pair<int, int>> edges) {
  if (live.empty()) return 0;
  for (int v : live) {
    bool touched = false;
    for (auto [a, b] : edges) touched = touched || a == v || b == v;
    if (!touched) return -1;
  }
  auto larger = [](int a, int b) { return a == -1 || (b != -1 && a > b); };
  int best = 0;
  bool first = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    auto without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    const int deleted = play(live, without);
    std::vector<int> gone{u, v};
    for (auto [a, b] : edges) {
      if (a == u || a == v) gone.push_back(b);
      if (b == u || b == v) gone.push_back(a);
    }
    std::vector<int> rest;
    for (int x : live)
      if (std::find(gone.begin(), gone.end(), x) == gone.end()) rest.push_back(x);
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : edges)
      if (std::find(gone.begin(), gone.end(), a) == gone.end() && std::find(gone.begin(), gone.end(), b) == gone.end())
        kept.emplace_back(a, b);
    int exploded = play(rest, kept);
    if (exploded != -1) ++exploded;
    const int value = larger(deleted, exploded) ? exploded : deleted;
    if (first || larger(value, best)) best = value;
    first = false;
  }
  return best;
}

}  // namespace

int game_value(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  return play(live, edges);
}

}  // namespace fbh::oracle
