#include "fbh/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fbh {

namespace {

WeightedHypergraph finish(std::vector<int> sides, const WeightFunction& f) {
  return {PartiteHypergraph(std::move(sides), f.support()), f};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int x = 2; x * x <= p; ++x)
    if (p % x == 0) return false;
  return true;
}

WeightedHypergraph pasch() { return nnn_tight(2); }

WeightedHypergraph nnn_tight(int n) {
  require(n >= 1, "nnn_tight needs n >= 1");
  WeightFunction f;
  for (int block = 0; 2 * block + 2 <= n; ++block) {
    const int lo = 2 * block + 1, hi = 2 * block + 2;
    for (const Edge& e : {Edge{lo, lo, lo}, Edge{lo, hi, hi}, Edge{hi, lo, hi}, Edge{hi, hi, lo}})
      f.add(e, Rational(1, 4));
  }
  if (n % 2 == 1) f.add({n, n, n}, Rational(1, 2));
  return finish({n, n, n}, f);
}

WeightedHypergraph drisko(int n) {
  require(n >= 2, "drisko needs n >= 2");
  WeightFunction f;
  for (int i = 1; i <= 2 * n - 2; ++i)
    for (int j = 1; j <= n; ++j) f.add({i, j, i < n ? j : j % n + 1}, 1);
  return finish({2 * n - 2, n, n}, f);
}

WeightedHypergraph mlessn(int k, int n) {
  require(3 * n / 4 < k && k < n, "mlessn needs floor(3n/4) < k < n");
  const int m = n / 2;
  const bool odd = n % 2 == 1;
  const Rational h2 = odd ? Rational(1, n - 1) - Rational(k, n * (n - 1) * (k - m)) : Rational(1, n);
  const Rational h3(k, n * (k - m));
  require(h2 >= 0, "mlessn weight on H_2 is negative for these parameters");
  WeightFunction f;
  for (int i = 1; i <= m; ++i) {
    f.add({i, i, i}, Rational(1, 2));
    f.add({i, m + i, m + i}, Rational(1, 2));
  }
  for (int j = m + 1; j <= k; ++j)
    for (int i = 1; i <= m; ++i) {
      f.add({j, i, i + m}, h2);
      f.add({j, i + m, i}, h2);
    }
  if (odd)
    for (int j = m + 1; j <= k; ++j) f.add({j, n, n}, h3);
  return finish({k, n, n}, f);
}

WeightedHypergraph mlessn2(int k, int n) {
  const int m = n / 2;
  require(n >= 2 && m < k, "mlessn2 needs floor(n/2) < k");
  const int kp = k - m;
  require(m % kp == 0, "mlessn2 needs k - floor(n/2) to divide floor(n/2)");
  const int q = m / kp;
  const bool odd = n % 2 == 1;
  const Rational h4 = odd ? Rational(kp, n - 1) - Rational(k, n * (n - 1)) : Rational(kp, 2 * m);
  require(h4 >= 0, "mlessn2 weight on H_4 is negative for these parameters");
  WeightFunction f;
  for (int i = 1; i <= m; ++i) {
    f.add({i, i, i}, Rational(1, 2));
    f.add({i, m + i, m + i}, Rational(1, 2));
  }
  for (int block = 1; block <= q; ++block)
    for (int j = 1; j <= kp; ++j) {
      const int base = (block - 1) * kp + j;
      f.add({j + m, base, base + m}, h4);
      f.add({j + m, base + m, base}, h4);
    }
  if (odd)
    for (int j = m + 1; j <= k; ++j) f.add({j, n, n}, Rational(k, n * kp));
  return finish({k, n, n}, f);
}

WeightedHypergraph main_negative(int n, const Rational& r, int k) {
  require(n >= 1 && r >= 1, "main_negative needs n >= 1 and r >= 1");
  const Rational rn = r * n, two_r = 2 * r, p_exact = 2 * r * n / (2 * r + 1);
  require(denominator(rn) == 1 && denominator(two_r) == 1 && denominator(p_exact) == 1,
          "main_negative needs rn, 2r and 2rn/(2r+1) integral");
  const int p = static_cast<int>(numerator(p_exact));
  const int r2 = static_cast<int>(numerator(two_r));
  require(p <= k && Rational(k) <= rn, "main_negative needs 2rn/(2r+1) <= k <= rn");
  const int big_n = k - p;
  const Rational y = (2 * r + 1) / k;
  const Rational x = y - (2 * r + 1) / rn;
  WeightFunction f;
  for (int i = 1; i <= p; ++i) {
    const int partner = p + (i + r2 - 1) / r2;
    for (int j = 1; j <= big_n; ++j) f.add({i, i, j}, y);
    f.add({i, partner, big_n + i}, 1);
    f.add({partner, i, big_n + i}, 1);
    for (int j = 1; j <= p; ++j) f.add({i, i, big_n + j}, x);
  }
  return finish({n, n, k}, f);
}

WeightedHypergraph zeta_counterexample(int n) {
  require(n >= 3, "zeta_counterexample needs n >= 3 (n = 2 leaves the first family empty)");
  const int m = n - 1, big_n = m * m - m;
  const Rational y(m + 1, m + big_n), x(1, m + big_n);
  WeightFunction f;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= big_n; ++j) f.add({i, j}, y);
    for (int j = big_n + 1; j <= big_n + m; ++j) f.add({i, j}, x);
  }
  for (int j = big_n + 1; j <= big_n + m; ++j) f.add({n, j}, 1);
  return finish({n, big_n + m}, f);
}

Multigraph as_multigraph(const PartiteHypergraph& h) {
  require(h.d() == 2, "as_multigraph needs a bipartite hypergraph");
  Multigraph g{h.sides()[0], h.sides()[1], {}};
  for (std::size_t i = 0; i < h.size(); ++i)
    g.edges.push_back({h.edges()[i][0], h.edges()[i][1], static_cast<int>(i) + 1});
  return g;
}

PartiteHypergraph truncated_projective(int q) {
  const int p = q - 1;
  require(is_prime(p), "truncated_projective supports q - 1 prime only");
  // Drop the point at infinity of the vertical direction. Side 0 is the rest
  // of the line at infinity (slopes), side c + 1 is the vertical line x = c;
  // the edges are the lines y = s x + b.
  std::vector<Edge> edges;
  for (int s = 0; s < p; ++s)
    for (int b = 0; b < p; ++b) {
      Edge e{s + 1};
      for (int c = 0; c < p; ++c) e.push_back((s * c + b) % p + 1);
      edges.push_back(std::move(e));
    }
  return PartiteHypergraph(std::vector<int>(q, p), std::move(edges));
}

PartiteHypergraph duplicate_side(const PartiteHypergraph& h, int m) {
  require(m >= 0 && h.d() >= 1, "duplicate_side needs m >= 0");
  auto sides = h.sides();
  for (int i = 0; i < m; ++i) sides.push_back(h.sides().back());
  std::vector<Edge> edges;
  for (Edge e : h.edges()) {
    const int last = e.back();
    for (int i = 0; i < m; ++i) e.push_back(last);
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::move(sides), std::move(edges));
}

PartiteHypergraph column_blocks(int n, int k) {
  require(n >= 1 && k >= 1 && k < 31 && 2 * ((1 << (k - 1)) - 1) < n,
          "column_blocks needs 2^(k-1) - 1 < n/2");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    // Column counts: 2^(t-1) for t < i, the rest in column i.
    std::vector<int> columns;
    for (int t = 1; t < i; ++t) columns.insert(columns.end(), 1 << (t - 1), t);
    columns.insert(columns.end(), n - (1 << (i - 1)) + 1, i);
    std::sort(columns.begin(), columns.end());
    do edges.push_back(columns);
    while (std::next_permutation(columns.begin(), columns.end()));
  }
  return PartiteHypergraph(std::vector<int>(n, k), std::move(edges));
}

PartiteHypergraph disjoint_union(const PartiteHypergraph& a, const PartiteHypergraph& b) {
  require(a.d() == b.d(), "disjoint_union needs equal d");
  std::vector<int> sides;
  for (int t = 0; t < a.d(); ++t) sides.push_back(a.sides()[t] + b.sides()[t]);
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) {
    for (int t = 0; t < b.d(); ++t) e[t] += a.sides()[t];
    edges.push_back(std::move(e));
  }
  return PartiteHypergraph(std::move(sides), std::move(edges));
}

PartiteHypergraph conj_nn(int n, int variant, int param) {
  auto plane = [](int q, int copies) { return duplicate_side(truncated_projective(q), copies); };
  auto plane_ok = [](int q) { return q >= 3 && is_prime(q - 1); };
  switch (variant) {
    case 1:
      require(plane_ok(n), "variant 1 needs n - 1 prime");
      return disjoint_union(plane(n, 0), column_blocks(n, 1));
    case 2:
      require(plane_ok(n - 1) && n >= 3, "variant 2 needs n - 2 prime");
      return disjoint_union(plane(n - 1, 1), column_blocks(n, 2));
    case 3: {
      int q = param;
      if (q == 0)
        for (int c = 3; c <= n - 1 && q == 0; ++c)
          if (plane_ok(c) && plane_ok(n + 2 - c)) q = c;
      const int p = n + 2 - q;
      require(plane_ok(q) && plane_ok(p), "variant 3 needs q + p - 2 = n with q - 1 and p - 1 prime");
      return disjoint_union(plane(q, p - 2), plane(p, q - 2));
    }
    case 4: {
      int k = param;
      if (k == 0)
        for (int c = 1; c < 31 && 2 * ((1 << (c - 1)) - 1) < n; ++c)
          if (plane_ok(n - c + 1)) k = c;
      require(k >= 1 && k < 31 && 2 * ((1 << (k - 1)) - 1) < n && plane_ok(n - k + 1),
              "variant 4 needs n - k prime and 2^(k-1) - 1 < n/2");
      return disjoint_union(plane(n - k + 1, k - 1), column_blocks(n, k));
    }
    default:
      throw std::invalid_argument("conj_nn variant must be 1, 2, 3 or 4");
  }
}

}  // namespace fbh
