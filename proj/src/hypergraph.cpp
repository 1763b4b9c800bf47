#include "fbh/hypergraph.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "fbh/lp.hpp"

namespace fbh {

PartiteHypergraph::PartiteHypergraph(std::vector<int> sides, std::vector<Edge> edges)
    : sides_(std::move(sides)), edges_(std::move(edges)) {
  offsets_.assign(1, 0);
  for (int a : sides_) {
    if (a < 1) throw std::invalid_argument("side sizes must be at least 1");
    offsets_.push_back(offsets_.back() + a);
  }
  for (const auto& e : edges_) {
    if (e.size() != sides_.size())
      throw std::invalid_argument("edge length " + std::to_string(e.size()) + " != d = " +
                                  std::to_string(sides_.size()));
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e[t] < 1 || e[t] > sides_[t])
        throw std::invalid_argument("edge index out of range on side " + std::to_string(t + 1));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool PartiteHypergraph::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

WeightFunction::WeightFunction(std::map<Edge, Rational> weights) : weights_(std::move(weights)) {
  for (auto it = weights_.begin(); it != weights_.end();) {
    if (it->second < 0) throw std::invalid_argument("negative weight");
    if (it->second == 0)
      it = weights_.erase(it);
    else
      ++it;
  }
}

Rational WeightFunction::at(const Edge& e) const {
  auto it = weights_.find(e);
  return it == weights_.end() ? Rational(0) : it->second;
}

void WeightFunction::add(const Edge& e, const Rational& w) {
  Rational& slot = weights_[e];
  slot += w;
  if (slot < 0) throw std::invalid_argument("negative weight");
  if (slot == 0) weights_.erase(e);
}

Rational WeightFunction::total() const {
  Rational sum = 0;
  for (const auto& [e, w] : weights_) sum += w;
  return sum;
}

std::vector<Edge> WeightFunction::support() const {
  std::vector<Edge> out;
  out.reserve(weights_.size());
  for (const auto& [e, w] : weights_) out.push_back(e);
  return out;
}

void check_weights(const PartiteHypergraph& h, const WeightFunction& f) {
  for (const auto& [e, w] : f.weights())
    if (!h.contains(e)) throw std::invalid_argument("weight on an edge outside the hypergraph");
}

std::vector<std::vector<Rational>> degrees(const PartiteHypergraph& h, const WeightFunction& f) {
  check_weights(h, f);
  std::vector<std::vector<Rational>> deg;
  for (int a : h.sides()) deg.emplace_back(a);
  for (const auto& [e, w] : f.weights())
    for (int t = 0; t < h.d(); ++t) deg[t][e[t] - 1] += w;
  return deg;
}

bool is_balanced(const PartiteHypergraph& h, const WeightFunction& f) {
  if (f.empty()) return false;
  for (const auto& [e, w] : f.weights())
    if (!h.contains(e)) return false;
  for (const auto& side : degrees(h, f))
    for (const auto& x : side)
      if (x != side.front()) return false;
  return true;
}

std::optional<WeightFunction> balanced_certificate(const PartiteHypergraph& h) {
  const auto& edges = h.edges();
  LPProblem lp(edges.size(), Sense::Feasibility);
  for (int t = 0; t < h.d(); ++t) {
    for (int v = 1; v <= h.sides()[t]; ++v) {
      std::vector<Rational> row(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i][t] == v) row[i] = 1;
      lp.add(std::move(row), Relation::Equal, Rational(1, h.sides()[t]));
    }
  }
  const auto result = lp_solve(lp);
  if (result.status != LPStatus::Optimal) return std::nullopt;
  WeightFunction f;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (result.point[i] != 0) f.add(edges[i], result.point[i]);
  return f;
}

namespace {

Rational fractional_matching_number(const PartiteHypergraph& h, const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return 0;
  LPProblem lp(edge_ids.size(), Sense::Maximize);
  std::fill(lp.objective.begin(), lp.objective.end(), Rational(1));
  for (int t = 0; t < h.d(); ++t) {
    for (int v = 1; v <= h.sides()[t]; ++v) {
      std::vector<Rational> row(edge_ids.size());
      bool touched = false;
      for (std::size_t i = 0; i < edge_ids.size(); ++i) {
        if (h.edges()[edge_ids[i]][t] == v) {
          row[i] = 1;
          touched = true;
        }
      }
      if (touched) lp.add(std::move(row), Relation::LessEqual, Rational(1));
    }
  }
  return lp_solve(lp).value;
}

constexpr std::size_t kMaxVertices = 128;
using VertexMask = std::bitset<kMaxVertices>;

// Remaining-edge count at or above which a node also consults the LP bound.
constexpr std::size_t kLpBoundThreshold = 24;

class MatchingSearch {
 public:
  explicit MatchingSearch(const PartiteHypergraph& h) : h_(h) {
    for (const auto& e : h.edges()) {
      VertexMask m;
      std::vector<int> ids;
      for (int t = 0; t < h.d(); ++t) {
        ids.push_back(h.vertex_id(t, e[t]));
        m.set(ids.back());
      }
      masks_.push_back(m);
      ids_.push_back(std::move(ids));
    }
  }

  std::vector<Edge> run() {
    std::vector<int> all(h_.size());
    std::iota(all.begin(), all.end(), 0);
    search(all);
    std::vector<Edge> out;
    for (int i : best_) out.push_back(h_.edges()[i]);
    return out;
  }

 private:
  // min over sides of the number of vertices still covered on that side.
  std::size_t side_bound(const std::vector<int>& remaining) const {
    VertexMask covered;
    for (int i : remaining) covered |= masks_[i];
    std::size_t bound = remaining.size();
    for (int t = 0; t < h_.d(); ++t) {
      std::size_t count = 0;
      for (int v = 1; v <= h_.sides()[t]; ++v)
        if (covered.test(h_.vertex_id(t, v))) ++count;
      bound = std::min(bound, count);
    }
    return bound;
  }

  void search(const std::vector<int>& remaining) {
    if (current_.size() > best_.size()) best_ = current_;
    if (remaining.empty()) return;
    if (current_.size() + side_bound(remaining) <= best_.size()) return;
    if (remaining.size() >= kLpBoundThreshold) {
      const auto lp = floor(fractional_matching_number(h_, remaining));
      if (Integer(current_.size()) + lp <= Integer(best_.size())) return;
    }

    // Fail-first: the vertex of minimum positive degree, lowest (side, index) on ties.
    std::vector<int> degree(h_.vertex_count(), 0);
    for (int i : remaining)
      for (int v : ids_[i]) ++degree[v];
    int pivot = -1;
    for (int v = 0; v < h_.vertex_count(); ++v)
      if (degree[v] > 0 && (pivot < 0 || degree[v] < degree[pivot])) pivot = v;

    for (int i : remaining) {
      if (!masks_[i].test(pivot)) continue;
      std::vector<int> next;
      for (int j : remaining)
        if ((masks_[i] & masks_[j]).none()) next.push_back(j);
      current_.push_back(i);
      search(next);
      current_.pop_back();
    }
    std::vector<int> without;
    for (int j : remaining)
      if (!masks_[j].test(pivot)) without.push_back(j);
    search(without);
  }

  const PartiteHypergraph& h_;
  std::vector<VertexMask> masks_;
  std::vector<std::vector<int>> ids_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

Rational nu_star(const PartiteHypergraph& h) {
  std::vector<int> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  return fractional_matching_number(h, all);
}

std::vector<Edge> maximum_matching(const PartiteHypergraph& h) {
  if (static_cast<std::size_t>(h.vertex_count()) > kMaxVertices)
    throw std::invalid_argument("matching search supports at most 128 vertices");
  return MatchingSearch(h).run();
}

int nu(const PartiteHypergraph& h) { return static_cast<int>(maximum_matching(h).size()); }

bool is_matching(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].size() != edges[j].size()) return false;
      for (std::size_t t = 0; t < edges[i].size(); ++t)
        if (edges[i][t] == edges[j][t]) return false;
    }
  return true;
}

Multigraph neighborhood(const PartiteHypergraph& h, const std::vector<int>& k) {
  if (h.d() != 3) throw std::invalid_argument("neighborhood multigraphs need a tripartite hypergraph");
  std::vector<bool> in_k(h.sides()[0] + 1, false);
  for (int x : k) {
    if (x < 1 || x > h.sides()[0]) throw std::invalid_argument("K index out of range");
    in_k[x] = true;
  }
  Multigraph g{h.sides()[1], h.sides()[2], {}};
  for (const auto& e : h.edges())
    if (in_k[e[0]]) g.edges.push_back({e[1], e[2], e[0]});
  return g;
}

WeightedHypergraph random_balanced(const std::vector<int>& sides, std::uint64_t seed, int layers) {
  if (sides.empty()) throw std::invalid_argument("need at least one side");
  if (layers < 1) throw std::invalid_argument("need at least one layer");
  long long slots = 1;
  for (int a : sides) {
    if (a < 1) throw std::invalid_argument("side sizes must be at least 1");
    slots = std::lcm(slots, static_cast<long long>(a));
  }
  std::mt19937_64 rng(seed);
  WeightFunction f;
  for (int layer = 0; layer < layers; ++layer) {
    std::vector<std::vector<int>> columns;
    for (std::size_t t = 0; t < sides.size(); ++t) {
      std::vector<int> column;
      for (int v = 1; v <= sides[t]; ++v)
        for (long long r = 0; r < slots / sides[t]; ++r) column.push_back(v);
      if (t > 0) std::shuffle(column.begin(), column.end(), rng);
      columns.push_back(std::move(column));
    }
    for (long long s = 0; s < slots; ++s) {
      Edge e;
      for (const auto& column : columns) e.push_back(column[s]);
      f.add(e, 1);
    }
  }
  return {PartiteHypergraph(sides, f.support()), f};
}

}  // namespace fbh
