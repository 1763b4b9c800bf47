// JSON encodings. Indices are 1-based and rationals are "p/q" strings.
#pragma once

#include <string>

#include "json.hpp"

#include "fbh/cake.hpp"
#include "fbh/dinterval.hpp"
#include "fbh/hilbert.hpp"
#include "fbh/hypergraph.hpp"
#include "fbh/topology.hpp"

namespace fbh::io {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
/// Accepts "p/q" strings and plain integers.
Rational rational_from(const Json& j);

/// {"sides": [...], "edges": [[...], ...]}
Json to_json(const PartiteHypergraph& h);
PartiteHypergraph hypergraph_from(const Json& j);

/// {"weights": [{"edge": [...], "w": "p/q"}, ...]}
Json to_json(const WeightFunction& f);
WeightFunction weights_from(const Json& j);

/// Hypergraph fields plus "weights".
Json to_json(const WeightedHypergraph& wh);

/// {"vertices": n, "facets": [[...], ...]}
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from(const Json& j);

/// {"vertices": n, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from(const Json& j);

/// {"b": |B|, "c": |C|, "edges": [[b, c, label], ...]}
Json to_json(const Multigraph& g);

Json to_json(const GameValue& v);
Json to_json(const EtaValue& v);

/// {"sides": [...], "weights": [{"edge": [...], "w": n}, ...]}
Json to_json(const IntegralBalanced& w);

/// {"d": 2, "families": [[{"parts": [["lo", "hi"], ...]}, ...], ...]}
Json to_json(const DIntervalFamilies& f);
DIntervalFamilies families_from(const Json& j);
Json to_json(const DInterval& x);
DInterval dinterval_from(const Json& j);

/// [["1/2", "1/2"], ["1", "0"]]
Json to_json(const Partition& p);
Partition partition_from(const Json& j);

Json read_file(const std::string& path);
/// Pretty-printed with a trailing newline.
void write_file(const std::string& path, const Json& j);

}  // namespace fbh::io
