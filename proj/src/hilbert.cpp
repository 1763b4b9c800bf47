#include "fbh/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "fbh/rational.hpp"

namespace fbh {

namespace {

std::vector<Edge> all_edges(const std::vector<int>& sides) {
  std::vector<Edge> out;
  Edge e(sides.size(), 1);
  for (;;) {
    out.push_back(e);
    std::size_t t = sides.size();
    while (t > 0 && e[t - 1] == sides[t - 1]) e[--t] = 1;
    if (t == 0) return out;
    ++e[t - 1];
  }
}

long long side_lcm(const std::vector<int>& sides) {
  long long l = 1;
  for (int a : sides) l = std::lcm(l, static_cast<long long>(a));
  return l;
}

void check_sides(const std::vector<int>& sides) {
  if (sides.empty()) throw std::invalid_argument("need at least one side");
  long long product = 1;
  for (int a : sides) {
    if (a < 1) throw std::invalid_argument("side sizes must be at least 1");
    product *= a;
    if (product > 12) throw std::invalid_argument("at most 12 coordinates are supported");
  }
}

// Norms of the primitive integral generators of the cone's extreme rays, and
// the cone's dimension.
std::pair<std::vector<long long>, int> extreme_ray_norms(const std::vector<int>& sides) {
  const auto coords = all_edges(sides);
  const std::size_t k = coords.size();
  std::vector<std::vector<int>> rows;
  for (std::size_t t = 0; t < sides.size(); ++t)
    for (int v = 2; v <= sides[t]; ++v) {
      std::vector<int> row(k, 0);
      for (std::size_t i = 0; i < k; ++i) row[i] = (coords[i][t] == v) - (coords[i][t] == 1);
      rows.push_back(std::move(row));
    }
  auto restricted = [&](const std::vector<std::size_t>& cols) {
    RationalMatrix a(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) a(r, c) = rows[r][cols[c]];
    return a;
  };
  std::vector<std::size_t> every(k);
  std::iota(every.begin(), every.end(), 0);
  const int dim = static_cast<int>(null_space(restricted(every)).size());

  std::vector<long long> norms;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) cols.push_back(i);
    const auto basis = null_space(restricted(cols));
    if (basis.size() != 1) continue;
    const auto& v = basis[0];
    const bool positive = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
    const bool negative = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; });
    if (!positive && !negative) continue;
    Integer scale = 1;
    for (const auto& x : v) scale = lcm(scale, Integer(denominator(x)));
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, Integer(numerator(x * scale)));
    Integer norm = 0;
    for (const auto& x : v) norm += abs(Integer(numerator(x * scale))) / g;
    norms.push_back(static_cast<long long>(norm));
  }
  return {norms, dim};
}

}  // namespace

long long IntegralBalanced::norm() const {
  long long s = 0;
  for (const auto& [e, w] : weights) s += w;
  return s;
}

bool is_integral_balanced(const IntegralBalanced& w) {
  if (w.weights.empty()) return false;
  std::vector<std::vector<long long>> deg;
  for (int a : w.sides) deg.emplace_back(a, 0);
  for (const auto& [e, x] : w.weights) {
    if (x <= 0 || e.size() != w.sides.size()) return false;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] < 1 || e[t] > w.sides[t]) return false;
      deg[t][e[t] - 1] += x;
    }
  }
  for (const auto& side : deg)
    if (std::adjacent_find(side.begin(), side.end(), std::not_equal_to<>()) != side.end()) return false;
  return true;
}

std::vector<IntegralBalanced> balanced_of_norm(const std::vector<int>& sides, long long norm) {
  check_sides(sides);
  std::vector<IntegralBalanced> out;
  if (norm <= 0 || norm % side_lcm(sides) != 0) return out;
  const auto coords = all_edges(sides);
  std::vector<std::vector<long long>> room;
  for (int a : sides) room.emplace_back(a, norm / a);
  // last[t][v]: position of the final coordinate touching vertex v of side t.
  std::vector<std::vector<std::size_t>> last;
  for (int a : sides) last.emplace_back(a, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t t = 0; t < sides.size(); ++t) last[t][coords[i][t] - 1] = i;

  std::vector<long long> value(coords.size(), 0);
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == coords.size()) {
      IntegralBalanced w{sides, {}};
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (value[j] > 0) w.weights.emplace(coords[j], value[j]);
      out.push_back(std::move(w));
      return;
    }
    const auto& e = coords[i];
    long long hi = norm, lo = 0;
    for (std::size_t t = 0; t < sides.size(); ++t) {
      const long long r = room[t][e[t] - 1];
      hi = std::min(hi, r);
      if (last[t][e[t] - 1] == i) lo = std::max(lo, r);
    }
    for (long long x = lo; x <= hi; ++x) {
      for (std::size_t t = 0; t < sides.size(); ++t) room[t][e[t] - 1] -= x;
      value[i] = x;
      place(i + 1);
      for (std::size_t t = 0; t < sides.size(); ++t) room[t][e[t] - 1] += x;
    }
    value[i] = 0;
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::variant<HilbertBasis, CapExceeded> hilbert_basis(const std::vector<int>& sides, long long norm_cap) {
  check_sides(sides);
  const long long step = side_lcm(sides);
  auto [norms, dim] = extreme_ray_norms(sides);
  std::sort(norms.rbegin(), norms.rend());
  long long bound = 0;
  for (int i = 0; i < dim && i < static_cast<int>(norms.size()); ++i) bound += norms[i];
  // Generators sit in a half-open parallelepiped spanned by at most `dim`
  // extreme rays, so their norm is strictly below `bound`.
  const long long closure = (bound - 1) / step * step;

  std::vector<IntegralBalanced> generators;
  for (long long norm = step; norm <= std::min(norm_cap, closure); norm += step) {
    const std::size_t before = generators.size();
    for (auto& w : balanced_of_norm(sides, norm)) {
      const bool reducible = std::any_of(generators.begin(), generators.begin() + static_cast<std::ptrdiff_t>(before),
                                         [&](const IntegralBalanced& g) {
                                           for (const auto& [e, x] : g.weights) {
                                             auto it = w.weights.find(e);
                                             if (it == w.weights.end() || it->second < x) return false;
                                           }
                                           return true;
                                         });
      if (!reducible) generators.push_back(std::move(w));
    }
  }
  if (norm_cap < closure) return CapExceeded{std::move(generators), closure};
  return HilbertBasis{std::move(generators), closure};
}

namespace {

// Kuhn's augmenting paths; adj[i] lists the right vertices of left vertex i in
// preference order. Returns match_of_left (-1 when unmatched).
std::vector<int> bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<int> left_of(right_count, -1), right_of(adj.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (left_of[v] < 0 || augment(left_of[v])) {
        left_of[v] = u;
        right_of[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < adj.size(); ++u) {
    seen.assign(right_count, 0);
    augment(static_cast<int>(u));
  }
  return right_of;
}

}  // namespace

std::vector<Permutation> birkhoff_decompose(const std::vector<std::vector<long long>>& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  long long line = -1;
  std::vector<long long> col(n, 0);
  for (const auto& row : w) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
    long long s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] < 0) throw std::invalid_argument("negative entry");
      s += row[j];
      col[j] += row[j];
    }
    if (line >= 0 && s != line) throw std::invalid_argument("row sums differ");
    line = s;
  }
  for (long long c : col)
    if (c != line) throw std::invalid_argument("column sums differ from row sums");

  auto rest = w;
  std::vector<Permutation> parts;
  for (long long round = 0; round < line; ++round) {
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rest[i][j] > 0) adj[i].push_back(static_cast<int>(j));
    const auto match = bipartite_matching(adj, static_cast<int>(n));
    Permutation perm;
    for (std::size_t i = 0; i < n; ++i) {
      // A positive matrix with equal line sums always has a perfect matching.
      if (match[i] < 0) throw std::logic_error("support has no perfect matching");
      --rest[i][match[i]];
      perm.push_back(match[i] + 1);
    }
    parts.push_back(std::move(perm));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

HallExtension hall_extend(const PartiteHypergraph& hprime, const std::vector<Edge>& m,
                          const WeightFunction& wprime) {
  check_weights(hprime, wprime);
  const int d = hprime.d() - 1;
  if (d < 1) throw std::invalid_argument("hprime needs at least two sides");
  if (!is_matching(m)) throw std::invalid_argument("M is not a matching");
  const int last = hprime.sides().back();
  std::vector<std::vector<int>> adj(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (static_cast<int>(m[i].size()) != d) throw std::invalid_argument("M edges need d coordinates");
    bool projected = false;
    for (int j = 1; j <= last; ++j) {
      Edge e = m[i];
      e.push_back(j);
      const Rational x = wprime.at(e);
      if (x > 0) projected = true;
      if (x >= 1) adj[i].push_back(j - 1);
    }
    if (!projected) throw std::invalid_argument("an M edge is not in the projection of supp(w')");
  }
  const auto match = bipartite_matching(adj, last);
  HallExtension out;
  if (std::all_of(match.begin(), match.end(), [](int v) { return v >= 0; })) {
    std::vector<Edge> extended;
    for (std::size_t i = 0; i < m.size(); ++i) {
      Edge e = m[i];
      e.push_back(match[i] + 1);
      extended.push_back(std::move(e));
    }
    out.matching = std::move(extended);
    return out;
  }
  // Everything reachable from an unmatched M edge along alternating paths has
  // a neighbourhood smaller than itself.
  std::vector<int> left_of(last, -1);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (match[i] >= 0) left_of[match[i]] = static_cast<int>(i);
  std::vector<char> reached(m.size(), 0), seen(last, 0);
  std::vector<int> stack;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (match[i] < 0) {
      reached[i] = 1;
      stack.push_back(static_cast<int>(i));
    }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      const int w = left_of[v];
      if (w >= 0 && !reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    if (reached[i]) out.violator.push_back(m[i]);
  std::sort(out.violator.begin(), out.violator.end());
  return out;
}

}  // namespace fbh
