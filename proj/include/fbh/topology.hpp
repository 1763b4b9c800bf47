// Simplicial complexes, rational homology, connectivity, and Meshulam's game.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbh/hypergraph.hpp"
#include "fbh/rational.hpp"

namespace fbh {

/// A sorted set of 0-based vertex ids.
using Face = std::vector<int>;

/// A finite abstract simplicial complex stored by its facets. Every subset of
/// a facet is a face. A complex with no facets at all is void; the complex
/// whose only face is the empty set has the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Faces may be given in any order and need not be maximal; they are
  /// reduced to the inclusion-maximal ones.
  SimplicialComplex(int vertex_count, std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// Largest facet size minus one; -1 for {{}}, -2 for the void complex.
  int dimension() const;
  /// All faces with exactly `size` vertices, lexicographically sorted.
  std::vector<Face> faces_of_size(int size) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Face> facets_;
};

/// Simple undirected graph on vertices 0..n-1 (at most 64 vertices).
class Graph {
 public:
  Graph() = default;
  /// Throws on loops, duplicate pairs, or out-of-range endpoints.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  /// Sorted pairs (u, v) with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Neighbour bitmask of each vertex.
  const std::vector<std::uint64_t>& adjacency() const { return adjacency_; }

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Graph with n vertices and adjacency masks taken as-is.
Graph graph_from_adjacency(int n, const std::vector<std::uint64_t>& adjacency);

/// Result of Meshulam's game: a finite explosion count or infinity.
struct GameValue {
  bool infinite = false;
  int value = 0;

  static GameValue finite(int v) { return {false, v}; }
  static GameValue infinity() { return {true, 0}; }

  friend bool operator==(const GameValue&, const GameValue&) = default;
  friend bool operator<(const GameValue& a, const GameValue& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
  bool at_least(int k) const { return infinite || value >= k; }
};

/// Connectivity answer to a threshold query: either exact, or "at least cap".
struct EtaValue {
  int value = 0;
  bool at_least = false;

  static EtaValue exactly(int v) { return {v, false}; }
  static EtaValue lower_bound(int cap) { return {cap, true}; }

  bool reaches(int k) const { return value >= k; }
  friend bool operator==(const EtaValue&, const EtaValue&) = default;
};

SimplicialComplex independence_complex(const Graph& g);

/// Vertices are the labeled edges in order; two are adjacent when they share
/// an endpoint, so parallel edges are always adjacent.
Graph line_graph(const Multigraph& g);

/// The complex of matchings; identical to independence_complex(line_graph(g)).
SimplicialComplex matching_complex(const Multigraph& g);

/// dim of the j-th reduced rational homology group, j >= -1.
int betti(const SimplicialComplex& c, int j);

/// Reduced Betti numbers for j = -1 .. dimension().
std::vector<int> betti_numbers(const SimplicialComplex& c);

/// Homological connectivity: (largest k with H~_i = 0 for all i <= k) + 2.
/// Scans j = -1 .. cap-2 and returns j + 1 at the first nonvanishing group,
/// or lower_bound(cap) if none appears. A void complex gives 0.
EtaValue eta(const SimplicialComplex& c, int cap);

/// Same answer as eta(independence_complex(g), cap), computed from the
/// independent sets of size <= cap without building facets.
EtaValue eta_independence(const Graph& g, int cap);

/// Value of Meshulam's game on g with both players optimal:
/// psi(G) = max over edges e of min(psi(G - e), psi(G -. e) + 1),
/// infinite as soon as a vertex is isolated, 0 on the empty graph.
GameValue psi(const Graph& g);

/// Weights for con_certificate, one per labeled edge of the multigraph.
using CellWeights = std::vector<int>;

/// Plays the game on L(g) with CON offering pairs of cells in the four-phase
/// order of the weight-destruction argument (rows with weight sum >= 2, then
/// columns of two 1-cells, then rows pairing a 1-cell with a 0-cell, then
/// everything else), against a NON that minimizes the outcome. Requires
/// weights in {0,1,2}, row sums <= 2s, column sums <= 2, s >= 1.
GameValue con_certificate(const Multigraph& g, const CellWeights& f, const Rational& s);

/// ceil(|f| / (2s + 2)).
int con_bound(const CellWeights& f, const Rational& s);

struct HallReport {
  bool all_k_pass = false;
  std::optional<std::vector<int>> failing_k;  // 1-based side-1 indices
  std::optional<std::vector<Edge>> matching;  // exactly a_1 - deficiency edges
};

/// Checks eta(M(N_H(K))) >= |K| - deficiency for every K of side 1, and when
/// all pass exhibits a matching of size a_1 - deficiency. Tripartite only;
/// side 1 may have at most 12 vertices.
HallReport hall_check(const PartiteHypergraph& h, int deficiency);

}  // namespace fbh
