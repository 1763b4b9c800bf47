#include "fbh/io.hpp"

#include <fstream>
#include <stdexcept>

namespace fbh::io {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

Json to_json(const PartiteHypergraph& h) {
  Json j;
  j["sides"] = h.sides();
  j["edges"] = h.edges();
  return j;
}

PartiteHypergraph hypergraph_from(const Json& j) {
  return PartiteHypergraph(j.at("sides").get<std::vector<int>>(), j.at("edges").get<std::vector<Edge>>());
}

Json to_json(const WeightFunction& f) {
  Json list = Json::array();
  for (const auto& [e, w] : f.weights()) list.push_back({{"edge", e}, {"w", rational_json(w)}});
  return {{"weights", list}};
}

WeightFunction weights_from(const Json& j) {
  WeightFunction f;
  for (const auto& item : j.at("weights")) f.add(item.at("edge").get<Edge>(), rational_from(item.at("w")));
  return f;
}

Json to_json(const WeightedHypergraph& wh) {
  Json j = to_json(wh.graph);
  j["weights"] = to_json(wh.weights)["weights"];
  return j;
}

Json to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (auto f : c.facets()) {
    for (int& v : f) ++v;
    facets.push_back(f);
  }
  return {{"vertices", c.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from(const Json& j) {
  const int n = j.at("vertices").get<int>();
  std::vector<Face> faces;
  for (const auto& f : j.at("facets")) {
    Face face;
    for (int v : f.get<std::vector<int>>()) {
      if (v < 1 || v > n) throw std::invalid_argument("facet vertex out of range");
      face.push_back(v - 1);
    }
    faces.push_back(std::move(face));
  }
  return SimplicialComplex(n, std::move(faces));
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) throw std::invalid_argument("graph edges have two endpoints");
    edges.emplace_back(pair[0] - 1, pair[1] - 1);
  }
  return Graph(j.at("vertices").get<int>(), std::move(edges));
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.b, e.c, e.label});
  return {{"b", g.b_size}, {"c", g.c_size}, {"edges", edges}};
}

Json to_json(const GameValue& v) {
  if (v.infinite) return "inf";
  return v.value;
}

Json to_json(const EtaValue& v) {
  Json j{{"value", v.value}};
  j["at_least"] = v.at_least;
  return j;
}

Json to_json(const IntegralBalanced& w) {
  Json list = Json::array();
  for (const auto& [e, x] : w.weights) list.push_back({{"edge", e}, {"w", x}});
  return {{"sides", w.sides}, {"weights", list}};
}

Json to_json(const DInterval& x) {
  Json parts = Json::array();
  for (const auto& p : x.parts) parts.push_back({rational_json(p.lo), rational_json(p.hi)});
  return {{"parts", parts}};
}

DInterval dinterval_from(const Json& j) {
  DInterval x;
  for (const auto& p : j.at("parts")) {
    if (p.size() != 2) throw std::invalid_argument("interval parts are [lo, hi] pairs");
    x.parts.push_back({rational_from(p[0]), rational_from(p[1])});
  }
  check_dinterval(x);
  return x;
}

Json to_json(const DIntervalFamilies& f) {
  Json families = Json::array();
  for (const auto& fam : f.families) {
    Json members = Json::array();
    for (const auto& x : fam) members.push_back(to_json(x));
    families.push_back(members);
  }
  return {{"d", f.d}, {"families", families}};
}

DIntervalFamilies families_from(const Json& j) {
  DIntervalFamilies f;
  f.d = j.at("d").get<int>();
  for (const auto& fam : j.at("families")) {
    std::vector<DInterval> members;
    for (const auto& x : fam) {
      members.push_back(dinterval_from(x));
      if (members.back().d() != f.d) throw std::invalid_argument("member with the wrong d");
    }
    f.families.push_back(std::move(members));
  }
  return f;
}

Json to_json(const Partition& p) {
  Json cakes = Json::array();
  for (const auto& cake : p) {
    Json slices = Json::array();
    for (const auto& x : cake) slices.push_back(rational_json(x));
    cakes.push_back(slices);
  }
  return cakes;
}

Partition partition_from(const Json& j) {
  Partition p;
  for (const auto& cake : j) {
    std::vector<Rational> slices;
    for (const auto& x : cake) slices.push_back(rational_from(x));
    p.push_back(std::move(slices));
  }
  return p;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace fbh::io
