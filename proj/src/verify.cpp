#include "fbh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fbh/cake.hpp"
#include "fbh/constructions.hpp"
#include "fbh/dinterval.hpp"
#include "fbh/hilbert.hpp"
#include "fbh/oracle.hpp"
#include "fbh/search.hpp"
#include "fbh/topology.hpp"

namespace fbh::verify {

namespace {

using io::Json;

constexpr std::size_t kMaxFailures = 8;

// Collects per-case outcomes for one check.
struct Tally {
  long long cases = 0;
  long long failed = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failed;
    if (messages.size() < kMaxFailures) messages.push_back(what);
  }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::map<oracle::Tuple, Rational> weights_of(const WeightFunction& f) {
  return {f.weights().begin(), f.weights().end()};
}

bool edges_in(const PartiteHypergraph& h, const std::vector<Edge>& edges) {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return h.contains(e); });
}

std::string describe(const std::string& name, const std::vector<int>& params) {
  std::ostringstream out;
  out << name << '(';
  for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
  out << ')';
  return out.str();
}

CheckReport check_pasch(const Options& opt) {
  CheckReport r;
  r.claim = "Pasch hypergraph is (2,2,2)-balanced with nu = 1 and nu* = 2";
  PartiteHypergraph h = pasch().graph;
  if (opt.mutant) {
    auto edges = h.edges();
    std::replace(edges.begin(), edges.end(), Edge{2, 2, 1}, Edge{2, 2, 2});
    h = PartiteHypergraph(h.sides(), edges);
  }
  r.parameters = {{"hypergraph", io::to_json(h)}, {"mutant", opt.mutant}};
  const auto cert = balanced_certificate(h);
  bool uniform = cert.has_value() && cert->support() == h.edges();
  if (uniform)
    for (const auto& [e, w] : cert->weights()) uniform = uniform && w == Rational(1, 4);
  const int v = nu(h);
  const Rational vs = nu_star(h);
  const int brute = oracle::matching_number(h.edges());
  r.expected = {{"certificate", "1/4 on each of the 4 edges"}, {"nu", 1}, {"nu_star", "2"}};
  r.got = {{"certificate", cert ? io::to_json(*cert)["weights"] : Json(nullptr)},
           {"nu", v},
           {"nu_oracle", brute},
           {"nu_star", io::rational_json(vs)}};
  Tally t;
  t.expect(uniform, "balanced certificate is not f = 1/4 on the Pasch edges");
  t.expect(v == 1 && brute == 1, "nu != 1");
  t.expect(vs == 2, "nu* != 2");
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_nnn(const Options&) {
  CheckReport r;
  r.claim = "bm(n,n,n) = ceil(n/2): nnn_tight(n) is balanced with nu = ceil(n/2); exhaustive bm(2,2,2) = 1";
  r.parameters = {{"n", {2, 3, 4, 5, 6}}, {"exhaustive_sides", {2, 2, 2}}};
  Tally t;
  Json got = Json::array();
  for (int n = 2; n <= 6; ++n) {
    const auto wh = nnn_tight(n);
    const bool balanced = oracle::constant_degrees(wh.graph.sides(), weights_of(wh.weights)) &&
                          balanced_certificate(wh.graph).has_value();
    const int v = nu(wh.graph), brute = oracle::matching_number(wh.graph.edges());
    got.push_back({{"n", n}, {"balanced", balanced}, {"nu", v}, {"nu_oracle", brute}});
    t.expect(balanced, describe("nnn_tight", {n}) + " is not balanced");
    t.expect(v == ceil_div(n, 2) && brute == v, describe("nnn_tight", {n}) + " has the wrong nu");
  }
  const auto report = bm_search_exhaustive({2, 2, 2});
  const bool witness_ok = report.witness && oracle::matching_number(report.witness->edges()) == 1 &&
                          balanced_certificate(*report.witness).has_value();
  t.expect(report.min_nu == 1 && witness_ok, "exhaustive search at (2,2,2) did not return 1 with a valid witness");
  r.expected = {{"nu", "ceil(n/2)"}, {"bm_222", 1}};
  r.got = {{"instances", got},
           {"bm_222", report.min_nu ? Json(*report.min_nu) : Json(nullptr)},
           {"orbits_examined", report.examined},
           {"balanced_orbits", report.balanced},
           {"witness", report.witness ? io::to_json(*report.witness) : Json(nullptr)}};
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_furedi(const Options& opt) {
  CheckReport r;
  r.claim = "nu >= ceil(nu*/(d-1)) on random balanced hypergraphs";
  const int count = 500;
  r.parameters = {{"instances", count}, {"d", {2, 3}}, {"max_side", 5}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> side(1, 5), layers(1, 2);
  Tally t;
  long long oracle_checked = 0;
  int tightest = 1 << 30;
  for (int i = 0; i < count; ++i) {
    const int d = 2 + i % 2;
    std::vector<int> sides;
    for (int s = 0; s < d; ++s) sides.push_back(side(rng));
    const std::uint64_t seed = rng();
    const int l = layers(rng);
    const auto wh = random_balanced(sides, seed, l);
    const auto& h = wh.graph;
    const std::string name = describe("random_balanced", sides) + " seed " + std::to_string(seed);
    const int min_side = *std::min_element(sides.begin(), sides.end());
    const Rational vs = nu_star(h);
    const int v = nu(h);
    t.expect(oracle::constant_degrees(sides, weights_of(wh.weights)), name + " is not balanced");
    t.expect(vs == min_side, name + ": nu* != min a_t");
    t.expect(v >= ceil_div(min_side, d - 1), name + ": nu below ceil(nu*/(d-1))");
    t.expect(v <= min_side, name + ": nu above nu*");
    t.expect(is_matching(maximum_matching(h)), name + ": matching is not disjoint");
    if (h.size() <= 24) {
      ++oracle_checked;
      t.expect(oracle::matching_number(h.edges()) == v, name + ": nu disagrees with the oracle");
    }
    tightest = std::min(tightest, v - ceil_div(min_side, d - 1));
  }
  r.expected = {{"nu_minus_bound", ">= 0"}};
  r.got = {{"instances", count},
           {"min_nu_minus_bound", tightest},
           {"oracle_checked", oracle_checked},
           {"cases", t.cases},
           {"failed", t.failed}};
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

bool eta_covers_psi(const EtaValue& e, const GameValue& p) {
  if (p.infinite) return e.at_least;
  return e.at_least || e.value >= p.value;
}

CheckReport check_eta_psi(const Options& opt) {
  CheckReport r;
  const int cap = 6;
  r.claim = "eta(I(G)) >= Psi(G)";
  r.parameters = {{"exhaustive_vertices", "0..5"}, {"random_graphs", 200}, {"random_vertices", "6..8"},
                  {"cap", cap}, {"seed", opt.seed}};
  Tally t;
  std::map<std::string, long long> histogram;
  auto run = [&](const Graph& g) {
    const EtaValue e = eta(independence_complex(g), cap);
    const GameValue p = psi(g);
    const std::string key = (p.infinite ? std::string("inf") : std::to_string(p.value)) + " <= " +
                            (e.at_least ? ">=" : "") + std::to_string(e.value);
    ++histogram[key];
    std::ostringstream name;
    name << "graph on " << g.vertex_count() << " vertices with edges";
    for (auto [u, v] : g.edges()) name << ' ' << u + 1 << '-' << v + 1;
    t.expect(eta_covers_psi(e, p), name.str() + ": eta < Psi");
    t.expect(eta_independence(g, cap) == e, name.str() + ": the two eta routines disagree");
  };
  long long exhaustive = 0;
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      run(Graph(n, edges));
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  for (int i = 0; i < 200; ++i) {
    const int n = 6 + i % 3;
    const double density = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (keep(rng)) edges.emplace_back(u, v);
    run(Graph(n, edges));
  }
  Json hist = Json::object();
  for (const auto& [k, c] : histogram) hist[k] = c;
  r.expected = {{"relation", "eta >= Psi for every graph"}};
  r.got = {{"exhaustive_graphs", exhaustive}, {"random_graphs", 200}, {"psi_vs_eta", hist}, {"failed", t.failed}};
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_con(const Options& opt) {
  CheckReport r;
  r.claim = "eta(M(G)) >= ceil(|f|/(2s+2)); Psi(L(G)) and the explicit CON strategy reach the bound";
  const int count = 100;
  r.parameters = {{"instances", count},  {"rows", "2..5"},      {"columns", "3..7"},
                  {"cells", "6..10"},    {"weights", "0, 1, 2"}, {"s", {"1", "3/2", "2", "5/2"}},
                  {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed ^ 0xc0ffeeULL);
  const std::vector<Rational> s_values{Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
  Tally t;
  long long strict_gap = 0;
  std::map<int, long long> bounds;
  Json samples = Json::array();
  for (int i = 0; i < count; ++i) {
    // Wide grids with mostly nonzero weights, so that the bound is not trivially 1.
    const int rows = std::uniform_int_distribution<int>(2, 5)(rng);
    const int cols = std::uniform_int_distribution<int>(3, 7)(rng);
    const int cells = std::uniform_int_distribution<int>(6, 10)(rng);
    std::discrete_distribution<int> weight{1, 1, 3};
    const Rational s = s_values[rng() % s_values.size()];
    Multigraph g{rows, cols, {}};
    CellWeights f;
    for (int c = 0; c < cells; ++c) {
      g.edges.push_back({std::uniform_int_distribution<int>(1, rows)(rng),
                         std::uniform_int_distribution<int>(1, cols)(rng), c + 1});
      f.push_back(weight(rng));
    }
    // Lower weights until every row sum is <= 2s and every column sum <= 2.
    for (bool changed = true; changed;) {
      changed = false;
      std::map<int, int> row_sum, col_sum;
      for (int c = 0; c < cells; ++c) {
        row_sum[g.edges[c].b] += f[c];
        col_sum[g.edges[c].c] += f[c];
      }
      for (int c = 0; c < cells && !changed; ++c)
        if (f[c] > 0 && (Rational(row_sum[g.edges[c].b]) > 2 * s || col_sum[g.edges[c].c] > 2)) {
          --f[c];
          changed = true;
        }
    }
    const int bound = con_bound(f, s);
    const GameValue con = con_certificate(g, f, s);
    const GameValue game = psi(line_graph(g));
    const EtaValue e = eta(matching_complex(g), std::max(bound, 1));
    const std::string name = "instance " + std::to_string(i);
    t.expect(con.at_least(bound), name + ": CON strategy below the bound");
    t.expect(game.at_least(bound), name + ": Psi below the bound");
    t.expect(!(game < con), name + ": Psi below the CON strategy value");
    t.expect(e.reaches(bound), name + ": eta(M(G)) below the bound");
    if (!con.infinite && con.value > bound) ++strict_gap;
    ++bounds[bound];
    if (i < 5)
      samples.push_back({{"cells", io::to_json(g)["edges"]},
                         {"f", f},
                         {"s", io::rational_json(s)},
                         {"bound", bound},
                         {"con", io::to_json(con)},
                         {"psi", io::to_json(game)}});
  }
  r.expected = {{"con", ">= bound"}, {"psi", ">= con"}, {"eta", ">= bound"}};
  Json bound_hist = Json::object();
  for (auto [b, c] : bounds) bound_hist[std::to_string(b)] = c;
  r.got = {{"instances", count},
           {"bound_histogram", bound_hist},
           {"con_strictly_above_bound", strict_gap},
           {"samples", samples},
           {"failed", t.failed}};
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_hall(const Options& opt) {
  CheckReport r;
  r.claim = "bm(k,n,n) >= min(k, ceil(n/2)) through the topological Hall condition";
  const std::vector<std::pair<int, int>> params{{2, 3}, {3, 4}, {3, 5}, {4, 5}};
  r.parameters = {{"kn", {{2, 3}, {3, 4}, {3, 5}, {4, 5}}}, {"instances_each", 50}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed ^ 0x4a11ULL);
  Tally t;
  Json got = Json::array();
  for (auto [k, n] : params) {
    const int want = std::min(k, ceil_div(n, 2));
    const int deficiency = k - want;
    int passed = 0;
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t seed = rng();
      const auto wh = random_balanced({k, n, n}, seed, 1 + i % 2);
      const auto report = hall_check(wh.graph, deficiency);
      const std::string name = describe("random_balanced", {k, n, n}) + " seed " + std::to_string(seed);
      const bool ok = report.all_k_pass && report.matching && static_cast<int>(report.matching->size()) == want &&
                      is_matching(*report.matching) && edges_in(wh.graph, *report.matching);
      t.expect(ok, name + ": Hall check failed or gave no matching of size " + std::to_string(want));
      if (ok) ++passed;
    }
    got.push_back({{"k", k}, {"n", n}, {"deficiency", deficiency}, {"matching_size", want}, {"passed", passed}});
  }
  r.expected = {{"passed", "50 of 50 for each (k,n)"}};
  r.got = got;
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_constructions(const Options&) {
  CheckReport r;
  r.claim = "upper-bound constructions are balanced and have the claimed nu";
  r.parameters = {{"max_edges", 40}};
  Tally t;
  Json got = Json::array();
  auto examine = [&](const std::string& name, const WeightedHypergraph& wh, int lo, int hi, const std::string& claim) {
    if (wh.graph.size() > 40) return false;
    const bool balanced = oracle::constant_degrees(wh.graph.sides(), weights_of(wh.weights));
    const int v = nu(wh.graph), brute = oracle::matching_number(wh.graph.edges());
    got.push_back({{"construction", name},
                   {"edges", wh.graph.size()},
                   {"balanced", balanced},
                   {"nu", v},
                   {"nu_oracle", brute},
                   {"claim", claim}});
    t.expect(balanced, name + " is not balanced");
    t.expect(v == brute, name + ": nu disagrees with the oracle");
    t.expect(lo <= v && v <= hi, name + ": nu outside the claim " + claim);
    return true;
  };
  for (int n = 2;; ++n) {
    if (!examine(describe("drisko", {n}), drisko(n), n - 1, n - 1, "nu = n-1")) break;
  }
  for (int n = 5; n <= 16; ++n)
    for (int k = 3 * n / 4 + 1; k < n; ++k) {
      const int bound = n % 2 == 0 ? 3 * n / 4 : (3 * n + 1) / 4;
      const int lower = std::min(k, ceil_div(n, 2));
      examine(describe("mlessn", {k, n}), mlessn(k, n), lower, bound,
              std::to_string(lower) + " <= nu <= " + std::to_string(bound));
    }
  for (int n = 2; n <= 24; ++n) {
    const int m = n / 2;
    for (int k = m + 1; k <= 2 * m; ++k) {
      if (m % (k - m) != 0) continue;
      const int want = std::min(k, ceil_div(n, 2));
      examine(describe("mlessn2", {k, n}), mlessn2(k, n), want, want, "nu = " + std::to_string(want));
    }
  }
  for (int n = 1; n <= 20; ++n)
    for (int r2 = 2; r2 <= 2 * n; ++r2) {
      if (r2 * n % 2 != 0 || r2 * n % (r2 + 1) != 0) continue;
      const int p = r2 * n / (r2 + 1), rn = r2 * n / 2;
      for (int k = p; k <= rn; ++k) {
        // Edge count P(k - P) + 2P + P^2 [x > 0], known before building.
        const long long edges = 1LL * p * (k - p) + 2 * p + (k < rn ? 1LL * p * p : 0);
        if (edges > 40) continue;
        examine(describe("main_negative", {n, r2, k}) + " (second parameter is 2r)",
                main_negative(n, Rational(r2, 2), k), 0, p, "nu <= " + std::to_string(p));
      }
    }
  r.expected = {{"balanced", true}, {"nu", "within the stated claim and equal to the oracle"}};
  r.got = got;
  r.pass = t.failed == 0 && t.cases > 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_zeta(const Options&) {
  CheckReport r;
  r.claim = "zeta(n,(n-1)^2) < n at n = 3: the construction is balanced and eta(M(G)) <= 2";
  r.parameters = {{"n", 3}};
  const int n = 3, m = n - 1;
  const auto wh = zeta_counterexample(n);
  const auto deg = oracle::degree_table(wh.graph.sides(), weights_of(wh.weights));
  Tally t;
  const bool a_ok = std::all_of(deg[0].begin(), deg[0].end(), [&](const Rational& x) { return x == m; });
  const bool b_ok = std::all_of(deg[1].begin(), deg[1].end(), [&](const Rational& x) { return x == Rational(m + 1, m); });
  t.expect(a_ok, "side A degrees are not m");
  t.expect(b_ok, "side B degrees are not (m+1)/m");
  const auto g = as_multigraph(wh.graph);
  const auto mc = matching_complex(g);
  const int b1 = betti(mc, 1);
  const EtaValue e = eta(mc, 3);
  t.expect(b1 != 0, "betti_1(M(G)) = 0");
  t.expect(!e.at_least && e.value <= 2, "eta(M(G)) > 2");

  // The cross-polytope: pairs {(i,i), (i,N+i)}; every set taking at most
  // one vertex from each pair must be a matching of G.
  const int big_n = m * m - m;
  std::vector<std::pair<int, int>> pairs_ids;
  auto id_of = [&](int a, int b) {
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (g.edges[i].b == a && g.edges[i].c == b) return static_cast<int>(i);
    return -1;
  };
  for (int i = 1; i <= m; ++i) pairs_ids.emplace_back(id_of(i, i), id_of(i, big_n + i));
  bool cross = true;
  for (int choice = 0; choice < (1 << m); ++choice) {
    Face face;
    for (int i = 0; i < m; ++i) face.push_back(choice >> i & 1 ? pairs_ids[i].second : pairs_ids[i].first);
    std::sort(face.begin(), face.end());
    bool in = false;
    for (const auto& facet : mc.facets())
      if (std::includes(facet.begin(), facet.end(), face.begin(), face.end())) in = true;
    cross = cross && in;
  }
  t.expect(cross, "the cross-polytope is not inside M(G)");
  // Its face {(i, N+i)} dominates every edge, so it must be a facet.
  Face top;
  for (const auto& p : pairs_ids) top.push_back(p.second);
  std::sort(top.begin(), top.end());
  const auto& facets = mc.facets();
  const bool maximal = std::find(facets.begin(), facets.end(), top) != facets.end();
  t.expect(maximal, "the matching {(i, N+i)} is not a facet of M(G)");
  r.expected = {{"deg_A", m}, {"deg_B", io::rational_json(Rational(m + 1, m))}, {"betti_1", "!= 0"}, {"eta", "<= 2"}};
  r.got = {{"deg_A", a_ok ? Json(m) : Json("not constant")},
           {"deg_B", b_ok ? io::rational_json(Rational(m + 1, m)) : Json("not constant")},
           {"betti_1", b1},
           {"eta", io::to_json(e)},
           {"cross_polytope_in_complex", cross},
           {"dominating_face_is_facet", maximal},
           {"graph", io::to_json(wh)}};
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_hilbert(const Options&) {
  CheckReport r;
  r.claim = "Gordan bases: permutation matrices for (n,n), unions of n disjoint stars K_{1,s} for (n,sn)";
  struct Case {
    std::vector<int> sides;
    long long cap;
    std::vector<std::map<oracle::Tuple, long long>> expected;
  };
  const std::vector<Case> cases{{{2, 2}, 4, oracle::permutation_indicators(2)},
                                {{3, 3}, 12, oracle::permutation_indicators(3)},
                                {{2, 4}, 12, oracle::star_unions(2, 2)}};
  r.parameters = {{"cases", {{{"sides", {2, 2}}, {"cap", 4}}, {{"sides", {3, 3}}, {"cap", 12}}, {{"sides", {2, 4}}, {"cap", 12}}}}};
  Tally t;
  Json got = Json::array();
  for (const auto& c : cases) {
    const std::string name = describe("hilbert_basis", c.sides);
    const auto result = hilbert_basis(c.sides, c.cap);
    const auto* basis = std::get_if<HilbertBasis>(&result);
    t.expect(basis != nullptr, name + ": cap did not reach closure");
    if (!basis) continue;
    std::set<std::map<oracle::Tuple, long long>> mine, theirs(c.expected.begin(), c.expected.end());
    std::vector<std::map<oracle::Tuple, long long>> gens;
    for (const auto& g : basis->generators) {
      mine.emplace(g.weights.begin(), g.weights.end());
      gens.emplace_back(g.weights.begin(), g.weights.end());
    }
    t.expect(mine == theirs, name + ": generators differ from the expected family");
    const auto all = oracle::balanced_vectors(c.sides, c.cap);
    long long decomposed = 0;
    for (const auto& w : all)
      if (oracle::decomposes(w, gens)) ++decomposed;
    t.expect(decomposed == static_cast<long long>(all.size()), name + ": some balanced vector does not decompose");
    bool minimal = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto others = gens;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      if (oracle::decomposes(gens[i], others)) minimal = false;
    }
    t.expect(minimal, name + ": a generator is a sum of the others");
    got.push_back({{"sides", c.sides},
                   {"cap", c.cap},
                   {"generators", basis->generators.size()},
                   {"expected_generators", c.expected.size()},
                   {"closure_norm", basis->closure_norm},
                   {"balanced_vectors_up_to_cap", all.size()},
                   {"decomposed", decomposed},
                   {"minimal", minimal}});
  }
  r.expected = {{"generators", "exactly the expected family, complete and minimal up to the cap"}};
  r.got = got;
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_cake(const Options&) {
  CheckReport r;
  r.claim = "(2n-2; n, n) and (n; n, 2n-2) do not guarantee n placated agents";
  const int q = 6;
  r.parameters = {{"n", {2, 3}}, {"q", q}};
  Tally t;
  Json got = Json::array();
  for (int n : {2, 3}) {
    for (const std::string kind : {"2n2nn", "nn2n2"}) {
      const auto inst = kind == "2n2nn" ? instance_2n2_nn(n) : instance_nn_2n2(n);
      const auto result = grid_max(inst, q);
      long long hungry_fail = 0;
      for_each_grid_partition(inst.slices, q, [&](const Partition& p) {
        if (!hungry_at(inst, p)) ++hungry_fail;
        return true;
      });
      const std::string name = kind + " n=" + std::to_string(n);
      t.expect(result.best <= n - 1, name + ": some grid partition placates n agents");
      t.expect(hungry_fail == 0, name + ": hungriness fails at some grid partition");
      got.push_back({{"instance", kind},
                     {"n", n},
                     {"grid_points", result.points},
                     {"max_nu_D", result.best},
                     {"argmax", io::to_json(result.argmax)},
                     {"hungriness_failures", hungry_fail}});
    }
  }
  r.expected = {{"max_nu_D", "<= n-1"}, {"hungriness_failures", 0}};
  r.got = got;
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

CheckReport check_dinterval(const Options& opt) {
  CheckReport r;
  r.claim = "2-interval families with no cover of m points on each line have m+1 disjoint members";
  const int wanted = 100;
  r.parameters = {{"families_per_m", wanted}, {"m", {1, 2}}, {"max_members", 8}, {"grid", "1/12"}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed ^ 0xd1ULL);
  Tally t;
  Json got = Json::array();
  for (int m : {1, 2}) {
    int accepted = 0;
    long long tried = 0, covered = 0;
    while (accepted < wanted && tried < 200000) {
      ++tried;
      const int size = std::uniform_int_distribution<int>(m + 1, 8)(rng);
      std::vector<DInterval> family;
      for (int i = 0; i < size; ++i) {
        DInterval x;
        for (int c = 0; c < 2; ++c) {
          const int lo = std::uniform_int_distribution<int>(0, 11)(rng);
          const int len = std::uniform_int_distribution<int>(1, std::min(12 - lo, 4))(rng);
          x.parts.push_back({Rational(lo, 12), Rational(lo + len, 12)});
        }
        family.push_back(std::move(x));
      }
      const auto cover = coverable(family, {m, m});
      if (cover) {
        ++covered;
        bool pierces = true;
        for (const auto& x : family) {
          bool hit = false;
          for (int c = 0; c < 2; ++c)
            for (const auto& p : (*cover)[c]) hit = hit || x.parts[c].contains(p);
          pierces = pierces && hit;
        }
        t.expect(pierces && (*cover)[0].size() <= static_cast<std::size_t>(m) &&
                     (*cover)[1].size() <= static_cast<std::size_t>(m),
                 "returned cover does not pierce every member");
        continue;
      }
      ++accepted;
      DIntervalFamilies fams{2, std::vector<std::vector<DInterval>>(m + 1, family)};
      const auto matching = rainbow_matching(fams, m + 1);
      bool ok = matching && static_cast<int>(matching->size()) >= m + 1;
      if (ok) {
        std::set<int> colors;
        for (std::size_t a = 0; a < matching->size(); ++a) {
          colors.insert((*matching)[a].first);
          for (std::size_t b = a + 1; b < matching->size(); ++b)
            ok = ok && disjoint(family[(*matching)[a].second], family[(*matching)[b].second]);
        }
        ok = ok && colors.size() == matching->size();
      }
      std::vector<std::vector<std::pair<Rational, Rational>>> plain;
      for (const auto& x : family) {
        std::vector<std::pair<Rational, Rational>> parts;
        for (const auto& p : x.parts) parts.emplace_back(p.lo, p.hi);
        plain.push_back(std::move(parts));
      }
      const bool oracle_ok = oracle::disjoint_family_size(plain) >= m + 1;
      t.expect(ok, "m=" + std::to_string(m) + ": no rainbow matching of size m+1 in an uncoverable family");
      t.expect(oracle_ok, "m=" + std::to_string(m) + ": oracle finds fewer than m+1 disjoint members");
    }
    t.expect(accepted == wanted, "m=" + std::to_string(m) + ": not enough uncoverable families generated");
    got.push_back({{"m", m}, {"uncoverable_families", accepted}, {"coverable_skipped", covered}, {"tried", tried}});
  }
  r.expected = {{"rainbow_matching", "size m+1 for every uncoverable family"}};
  r.got = got;
  r.pass = t.failed == 0;
  r.failures = t.messages;
  return r;
}

struct Entry {
  std::string id;
  double limit;
  std::function<CheckReport(const Options&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"pasch", 1, check_pasch},           {"nnn", 10, check_nnn},
      {"furedi", 60, check_furedi},        {"eta-psi", 300, check_eta_psi},
      {"con", 120, check_con},             {"hall", 300, check_hall},
      {"constructions", 120, check_constructions}, {"zeta", 60, check_zeta},
      {"hilbert", 120, check_hilbert},     {"cake", 600, check_cake},
      {"dinterval", 120, check_dinterval},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

CheckReport run_check(const std::string& id, const Options& options) {
  for (const auto& e : entries()) {
    if (e.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = e.run(options);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.failures.push_back(std::string("exception: ") + ex.what());
    }
    r.id = id;
    r.limit_seconds = e.limit;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.limit_seconds) {
      r.pass = false;
      r.failures.push_back("time limit exceeded");
    }
    return r;
  }
  throw std::invalid_argument("unknown check " + id);
}

Json to_json(const CheckReport& r) {
  Json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["parameters"] = r.parameters;
  j["expected"] = r.expected;
  j["got"] = r.got;
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  j["limit_seconds"] = r.limit_seconds;
  j["failures"] = r.failures;
  return j;
}

}  // namespace fbh::verify
