#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "fbh/topology.hpp"

namespace fbh {

namespace {

using Adjacency = std::vector<std::uint64_t>;

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Canonical labeling is exact up to this many vertices; larger states are
// memoized on their labeled adjacency only.
constexpr int kCanonicalLimit = 12;

struct KeyHash {
  std::size_t operator()(const Adjacency& a) const {
    std::size_t h = a.size();
    for (auto x : a) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Individualization-refinement over ordered partitions: the smallest
// relabeled adjacency among all leaves is a complete isomorphism invariant.
class Canonizer {
 public:
  explicit Canonizer(const Adjacency& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  /// The canonical form, or the input itself when the search tree is too
  /// large. Both are exact memo keys: equal keys mean isomorphic graphs.
  Adjacency run() {
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n_; ++v) by_degree[std::popcount(adj_[v])].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [deg, cell] : by_degree) cells.push_back(std::move(cell));
    search(refine(std::move(cells)));
    return leaves_ > kLeafBudget ? adj_ : best_;
  }

 private:
  std::vector<std::vector<int>> refine(std::vector<std::vector<int>> cells) const {
    for (;;) {
      std::vector<std::uint64_t> cell_mask;
      for (const auto& c : cells) {
        std::uint64_t m = 0;
        for (int v : c) m |= bit(v);
        cell_mask.push_back(m);
      }
      std::vector<std::vector<int>> next;
      bool split = false;
      for (const auto& c : cells) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : c) {
          std::vector<int> counts;
          for (auto m : cell_mask) counts.push_back(std::popcount(adj_[v] & m));
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> group{sig[0].second};
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
            split = true;
          }
          group.push_back(sig[i].second);
        }
        next.push_back(std::move(group));
      }
      cells = std::move(next);
      if (!split) return cells;
    }
  }

  void search(const std::vector<std::vector<int>>& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
        target = i;
    if (target == cells.size()) {
      ++leaves_;
      std::vector<int> order;
      for (const auto& c : cells) order.push_back(c[0]);
      Adjacency code(n_, 0);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (adj_[order[i]] & bit(order[j])) code[i] |= bit(j);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (leaves_ > kLeafBudget) return;
      // Twins are swapped by an automorphism fixing everything individualized
      // so far, so their subtrees give the same codes.
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
        return (adj_[v] & ~bit(w)) == (adj_[w] & ~bit(v));
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> next(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      next.push_back({v});
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      next.push_back(std::move(rest));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      search(refine(std::move(next)));
    }
  }

  static constexpr long long kLeafBudget = 256;

  const Adjacency& adj_;
  int n_;
  Adjacency best_;
  long long leaves_ = 0;
};

Adjacency compact(const Adjacency& adj, std::uint64_t keep) {
  std::vector<int> ids;
  for (std::uint64_t m = keep; m; m &= m - 1) ids.push_back(std::countr_zero(m));
  Adjacency out(ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (adj[ids[i]] & bit(ids[j])) out[i] |= bit(static_cast<int>(j));
  return out;
}

GameValue plus_one(GameValue v) { return v.infinite ? v : GameValue::finite(v.value + 1); }

// Game values as integers, with kInf standing for infinity.
constexpr int kInf = 1 << 20;

int inc(int v) { return v >= kInf ? kInf : v + 1; }

// Alpha-beta over CON's choice of edge and NON's reply. solve(adj, lo, hi)
// is fail-soft: a result <= lo is an upper bound, a result >= hi is a lower
// bound, anything in between is exact. Bounds are memoized per canonical
// state, so a later call with a wider window can reuse or tighten them.
class PsiTable {
 public:
  int solve(const Adjacency& adj, int alpha, int beta) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    for (auto row : adj)
      if (row == 0) return kInf;

    const Adjacency key = n <= kCanonicalLimit ? canonical(adj) : adj;
    Bounds known;
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) known = it->second;
    }
    if (known.lo == known.hi || known.lo >= beta) return known.lo;
    if (known.hi <= alpha) return known.hi;
    alpha = std::max(alpha, known.lo - 1);
    beta = std::min(beta, known.hi + 1);
    const int alpha0 = alpha, beta0 = beta;

    int best = -1;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    for (int u = 0; u < n && best < beta && best < kInf; ++u) {
      const std::uint64_t higher = u == 63 ? 0 : ~((bit(u) << 1) - 1);
      for (std::uint64_t m = adj[u] & higher; m && best < beta && best < kInf; m &= m - 1) {
        const int v = std::countr_zero(m);
        // NON's explosion: drop u, v and every neighbour of either.
        const std::uint64_t gone = adj[u] | adj[v] | bit(u) | bit(v);
        const int exploded = inc(solve(compact(adj, all & ~gone), alpha - 1, beta - 1));
        int value = exploded;
        if (exploded > alpha) {
          Adjacency deleted = adj;
          deleted[u] &= ~bit(v);
          deleted[v] &= ~bit(u);
          value = std::min(exploded, solve(deleted, alpha, std::min(beta, exploded)));
        }
        best = std::max(best, value);
        alpha = std::max(alpha, best);
      }
    }

    std::unique_lock lock(mutex_);
    Bounds& slot = values_[key];
    if (best <= alpha0) slot.hi = std::min(slot.hi, best);
    else if (best >= beta0) slot.lo = std::max(slot.lo, best);
    else slot.lo = slot.hi = best;
    return best;
  }

 private:
  struct Bounds {
    int lo = 0;
    int hi = kInf;
  };

  Adjacency canonical(const Adjacency& adj) {
    {
      std::shared_lock lock(mutex_);
      auto it = canon_.find(adj);
      if (it != canon_.end()) return it->second;
    }
    Adjacency c = Canonizer(adj).run();
    std::unique_lock lock(mutex_);
    canon_.emplace(adj, c);
    return c;
  }

  std::shared_mutex mutex_;
  std::unordered_map<Adjacency, Bounds, KeyHash> values_;
  std::unordered_map<Adjacency, Adjacency, KeyHash> canon_;
};

PsiTable& psi_table() {
  static PsiTable table;
  return table;
}

}  // namespace

GameValue psi(const Graph& g) {
  const int v = psi_table().solve(g.adjacency(), -1, kInf + 1);
  return v >= kInf ? GameValue::infinity() : GameValue::finite(v);
}

int con_bound(const CellWeights& f, const Rational& s) {
  long long total = 0;
  for (int w : f) total += w;
  return static_cast<int>(ceil(Rational(total) / (2 * s + 2)));
}

GameValue con_certificate(const Multigraph& g, const CellWeights& f, const Rational& s) {
  const int n = static_cast<int>(g.edges.size());
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("one weight per cell is required");
  if (n > 64) throw std::invalid_argument("at most 64 cells are supported");
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  std::map<int, int> row_sum, col_sum;
  for (int i = 0; i < n; ++i) {
    if (f[i] < 0 || f[i] > 2) throw std::invalid_argument("cell weights must lie in {0,1,2}");
    row_sum[g.edges[i].b] += f[i];
    col_sum[g.edges[i].c] += f[i];
  }
  for (auto [row, sum] : row_sum)
    if (Rational(sum) > 2 * s) throw std::invalid_argument("row weight exceeds 2s");
  for (auto [col, sum] : col_sum)
    if (sum > 2) throw std::invalid_argument("column weight exceeds 2");

  // CON's offer order over the edges of L(g).
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  auto same_row = [&](int i, int j) { return g.edges[i].b == g.edges[j].b; };
  auto same_col = [&](int i, int j) { return g.edges[i].c == g.edges[j].c; };
  auto phase = [&](auto&& pred) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!used[i][j] && pred(i, j)) {
          used[i][j] = true;
          order.emplace_back(i, j);
        }
  };
  phase([&](int i, int j) { return same_row(i, j) && f[i] + f[j] >= 2; });
  phase([&](int i, int j) { return same_col(i, j) && f[i] == 1 && f[j] == 1; });
  phase([&](int i, int j) { return same_row(i, j) && f[i] + f[j] == 1 && (f[i] == 1 || f[j] == 1); });
  phase([&](int i, int j) { return same_row(i, j) || same_col(i, j); });

  // Edges before `pos` are gone: each was offered and deleted, or lost an
  // endpoint. So (alive, pos) determines the position.
  std::map<std::pair<std::uint64_t, std::size_t>, GameValue> memo;
  std::function<GameValue(std::uint64_t, std::size_t)> value = [&](std::uint64_t alive,
                                                                   std::size_t pos) -> GameValue {
    if (alive == 0) return GameValue::finite(0);
    auto it = memo.find({alive, pos});
    if (it != memo.end()) return it->second;
    std::uint64_t touched = 0;
    std::size_t offer = order.size();
    for (std::size_t k = pos; k < order.size(); ++k) {
      auto [u, v] = order[k];
      if ((alive & bit(u)) && (alive & bit(v))) {
        touched |= bit(u) | bit(v);
        if (offer == order.size()) offer = k;
      }
    }
    GameValue result;
    if ((alive & ~touched) != 0) {
      result = GameValue::infinity();
    } else {
      auto [u, v] = order[offer];
      std::uint64_t gone = bit(u) | bit(v);
      for (std::size_t k = offer; k < order.size(); ++k) {
        auto [a, b] = order[k];
        if (!((alive & bit(a)) && (alive & bit(b)))) continue;
        if (a == u || a == v) gone |= bit(b);
        if (b == u || b == v) gone |= bit(a);
      }
      const GameValue deleted = value(alive, offer + 1);
      const GameValue exploded = plus_one(value(alive & ~gone, offer + 1));
      result = exploded < deleted ? exploded : deleted;
    }
    memo.emplace(std::make_pair(alive, pos), result);
    return result;
  };
  const std::uint64_t everyone = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  return value(everyone, 0);
}

}  // namespace fbh
