// d-partite hypergraphs, weight functions and matchings.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fbh/rational.hpp"

namespace fbh {

/// One vertex per side, 1-based side-local indices.
using Edge = std::vector<int>;

/// A d-partite hypergraph with a fixed side partition. Edges are kept sorted
/// and duplicate-free.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;
  /// Throws std::invalid_argument if a side is empty, an edge has the wrong
  /// length or an out-of-range index, or an edge is repeated.
  PartiteHypergraph(std::vector<int> sides, std::vector<Edge> edges);

  int d() const { return static_cast<int>(sides_.size()); }
  const std::vector<int>& sides() const { return sides_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const Edge& e) const;

  int vertex_count() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Dense 0-based id of vertex `index` (1-based) on side `side` (0-based);
  /// ids are ordered by (side, index).
  int vertex_id(int side, int index) const { return offsets_[side] + index - 1; }

  friend bool operator==(const PartiteHypergraph& a, const PartiteHypergraph& b) {
    return a.sides_ == b.sides_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> sides_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
};

/// Nonnegative rational weights on edges; absent edges weigh 0.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::map<Edge, Rational> weights);

  const std::map<Edge, Rational>& weights() const { return weights_; }
  Rational at(const Edge& e) const;
  /// Adds `w` to edge `e`; zero totals are dropped.
  void add(const Edge& e, const Rational& w);
  Rational total() const;
  std::vector<Edge> support() const;
  bool empty() const { return weights_.empty(); }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::map<Edge, Rational> weights_;
};

/// Throws unless every weighted edge is an edge of `h`.
void check_weights(const PartiteHypergraph& h, const WeightFunction& f);

/// deg_f(v) for every vertex, indexed [side][index-1].
std::vector<std::vector<Rational>> degrees(const PartiteHypergraph& h, const WeightFunction& f);

/// True when f is nonzero, supported on h, and has constant degree on each side.
bool is_balanced(const PartiteHypergraph& h, const WeightFunction& f);

/// A nonzero balanced function normalized to |f| = 1 (so every degree on
/// side t is 1/a_t), or nullopt when none exists.
std::optional<WeightFunction> balanced_certificate(const PartiteHypergraph& h);

/// Fractional matching number.
Rational nu_star(const PartiteHypergraph& h);

/// A maximum matching, found by branch and bound.
std::vector<Edge> maximum_matching(const PartiteHypergraph& h);
int nu(const PartiteHypergraph& h);

/// True when the edges are pairwise disjoint in every coordinate.
bool is_matching(const std::vector<Edge>& edges);

/// Bipartite multigraph with sides B and C. Parallel edges are distinct
/// objects told apart by position; `label` records where an edge came from.
struct LabeledEdge {
  int b = 0;
  int c = 0;
  int label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct Multigraph {
  int b_size = 0;
  int c_size = 0;
  std::vector<LabeledEdge> edges;
};

/// N_H(K) for a tripartite hypergraph: one (b, c) edge labeled x for every
/// hypergraph edge (x, b, c) with x in K. K holds 1-based side-1 indices.
Multigraph neighborhood(const PartiteHypergraph& h, const std::vector<int>& k);

struct WeightedHypergraph {
  PartiteHypergraph graph;
  WeightFunction weights;
};

/// Sum of `layers` random balanced designs. Each design lines up L = lcm(a_t)
/// slots per side, lists every side-t vertex L/a_t times in random order, and
/// adds the L resulting edges. Equal sides give permutation tuples; sizes
/// (n, sn) give unions of n disjoint stars K_{1,s}. Deterministic in `seed`.
WeightedHypergraph random_balanced(const std::vector<int>& sides, std::uint64_t seed, int layers);

}  // namespace fbh
