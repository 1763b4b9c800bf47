#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "fbh/topology.hpp"

namespace fbh {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("face with a repeated vertex");
    for (int v : f)
      if (v < 0 || v >= vertex_count) throw std::invalid_argument("face vertex out of range");
  }
  // Larger faces first, so a face only needs checking against kept ones.
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int dim = -2;
  for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

std::vector<Face> SimplicialComplex::faces_of_size(int size) const {
  std::vector<Face> out;
  if (size < 0) return out;
  for (const auto& facet : facets_) {
    const int n = static_cast<int>(facet.size());
    if (n < size) continue;
    std::vector<int> pick(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        out.push_back(pick);
        return;
      }
      for (int i = start; i <= n - (size - depth); ++i) {
        pick[depth] = facet[i];
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > 64) throw std::invalid_argument("graphs support 0..64 vertices");
  adjacency_.assign(vertex_count, 0);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  for (auto [u, v] : edges) {
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
  edges_ = std::move(edges);
}

Graph graph_from_adjacency(int n, const std::vector<std::uint64_t>& adjacency) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adjacency[u] >> v) & 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

namespace {

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

Face mask_to_face(std::uint64_t m) {
  Face f;
  while (m) {
    f.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return f;
}

// Bron-Kerbosch with pivoting on the complement: maximal independent sets.
void maximal_independent(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                         std::uint64_t x, std::vector<Face>& out) {
  if (p == 0 && x == 0) {
    out.push_back(mask_to_face(r));
    return;
  }
  // Non-neighbours of u (excluding u) are its neighbours in the complement.
  auto co = [&](int u) { return ~adj[u] & ~(std::uint64_t{1} << u); };
  const std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint64_t m = px; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int c = std::popcount(p & co(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t m = p & ~co(pivot); m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const std::uint64_t bit = std::uint64_t{1} << v;
    maximal_independent(adj, r | bit, p & co(v), x & co(v), out);
    p &= ~bit;
    x |= bit;
  }
}

// Independent sets with exactly `size` vertices, lexicographically sorted.
std::vector<Face> independent_sets(const Graph& g, int size) {
  std::vector<Face> out;
  if (size < 0) return out;
  const auto& adj = g.adjacency();
  Face current;
  std::function<void(int, std::uint64_t)> rec = [&](int start, std::uint64_t blocked) {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (int v = start; v < g.vertex_count(); ++v) {
      if ((blocked >> v) & 1) continue;
      current.push_back(v);
      rec(v + 1, blocked | adj[v]);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Sparse column reduction over a field. Columns are (row, value) lists sorted
// by row; the pivot of a column is its largest row.

struct PrimeField {
  using value_type = std::int64_t;
  static constexpr std::int64_t p = 2147483647;  // 2^31 - 1
  static value_type from_int(int x) { return ((x % p) + p) % p; }
  static bool is_zero(value_type a) { return a == 0; }
  static value_type sub(value_type a, value_type b) { return (a - b + p) % p; }
  static value_type mul(value_type a, value_type b) { return (a * b) % p; }
  static value_type inv(value_type a) {
    value_type result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

struct RationalField {
  using value_type = Rational;
  static value_type from_int(int x) { return Rational(x); }
  static bool is_zero(const value_type& a) { return a == 0; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type inv(const value_type& a) { return 1 / a; }
};

using SignedColumn = std::vector<std::pair<int, int>>;

template <class F>
std::size_t sparse_rank(const std::vector<SignedColumn>& input) {
  using V = typename F::value_type;
  using Column = std::vector<std::pair<int, V>>;
  std::map<int, Column> pivots;  // pivot row -> reduced column, normalized to 1 there
  for (const auto& signed_col : input) {
    Column col;
    col.reserve(signed_col.size());
    for (auto [r, v] : signed_col) col.emplace_back(r, F::from_int(v));
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) break;
      const V factor = col.back().second;
      const Column& piv = it->second;
      Column merged;
      merged.reserve(col.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          merged.push_back(std::move(col[a++]));
        } else if (a == col.size() || piv[b].first < col[a].first) {
          merged.emplace_back(piv[b].first, F::sub(F::from_int(0), F::mul(factor, piv[b].second)));
          ++b;
        } else {
          V v = F::sub(col[a].second, F::mul(factor, piv[b].second));
          if (!F::is_zero(v)) merged.emplace_back(col[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    if (col.empty()) continue;
    const V inv = F::inv(col.back().second);
    for (auto& entry : col) entry.second = F::mul(entry.second, inv);
    const int row = col.back().first;
    pivots.emplace(row, std::move(col));
  }
  return pivots.size();
}

// Boundary of size-k faces into size-(k-1) faces, with alternating signs.
std::vector<SignedColumn> boundary_columns(const std::vector<Face>& faces,
                                           const std::vector<Face>& lower) {
  std::vector<SignedColumn> cols;
  cols.reserve(faces.size());
  for (const auto& f : faces) {
    SignedColumn col;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g;
      g.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) g.push_back(f[j]);
      auto it = std::lower_bound(lower.begin(), lower.end(), g);
      if (it == lower.end() || *it != g) throw std::logic_error("complex is not closed downward");
      col.emplace_back(static_cast<int>(it - lower.begin()), i % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

// Reduced chain complex whose faces come from a size-indexed source.
class ChainComplex {
 public:
  explicit ChainComplex(std::function<std::vector<Face>(int)> source) : source_(std::move(source)) {}

  // Faces of size j + 1 (dimension j); dimension -1 holds the empty face.
  const std::vector<Face>& faces(int j) {
    auto it = faces_.find(j);
    if (it == faces_.end()) it = faces_.emplace(j, source_(j + 1)).first;
    return it->second;
  }

  // rank of the boundary C_j -> C_{j-1}.
  template <class F>
  std::size_t boundary_rank(int j) {
    if (j < 0) return 0;
    return sparse_rank<F>(boundary_columns(faces(j), faces(j - 1)));
  }

  // Mod-p ranks never exceed rational ones, so a vanishing mod-p Betti number
  // is already exact; otherwise recompute over Q.
  int betti(int j) {
    const auto dim = static_cast<long long>(faces(j).size());
    if (dim == 0) return 0;
    const long long mod_p = dim - static_cast<long long>(boundary_rank<PrimeField>(j)) -
                            static_cast<long long>(boundary_rank<PrimeField>(j + 1));
    if (mod_p == 0) return 0;
    return static_cast<int>(dim - static_cast<long long>(boundary_rank<RationalField>(j)) -
                            static_cast<long long>(boundary_rank<RationalField>(j + 1)));
  }

  EtaValue eta(int cap) {
    if (faces(-1).empty()) return EtaValue::exactly(0);
    for (int j = -1; j <= cap - 2; ++j)
      if (betti(j) != 0) return EtaValue::exactly(j + 1);
    return EtaValue::lower_bound(cap);
  }

 private:
  std::function<std::vector<Face>(int)> source_;
  std::map<int, std::vector<Face>> faces_;
};

ChainComplex chains_of(const SimplicialComplex& c) {
  return ChainComplex([&c](int size) { return c.faces_of_size(size); });
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  std::vector<Face> facets;
  maximal_independent(g.adjacency(), 0, low_bits(g.vertex_count()), 0, facets);
  return SimplicialComplex(g.vertex_count(), std::move(facets));
}

Graph line_graph(const Multigraph& g) {
  const int n = static_cast<int>(g.edges.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edges[i].b == g.edges[j].b || g.edges[i].c == g.edges[j].c) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

SimplicialComplex matching_complex(const Multigraph& g) { return independence_complex(line_graph(g)); }

int betti(const SimplicialComplex& c, int j) {
  if (j < -1) throw std::invalid_argument("betti index must be >= -1");
  if (c.is_void()) return 0;
  auto chains = chains_of(c);
  return chains.betti(j);
}

std::vector<int> betti_numbers(const SimplicialComplex& c) {
  std::vector<int> out;
  if (c.is_void()) return out;
  auto chains = chains_of(c);
  for (int j = -1; j <= c.dimension(); ++j) out.push_back(chains.betti(j));
  return out;
}

EtaValue eta(const SimplicialComplex& c, int cap) {
  if (cap < 1) throw std::invalid_argument("eta cap must be at least 1");
  if (c.is_void()) return EtaValue::exactly(0);
  auto chains = chains_of(c);
  return chains.eta(cap);
}

EtaValue eta_independence(const Graph& g, int cap) {
  if (cap < 1) throw std::invalid_argument("eta cap must be at least 1");
  ChainComplex chains([&g](int size) { return independent_sets(g, size); });
  return chains.eta(cap);
}

}  // namespace fbh
