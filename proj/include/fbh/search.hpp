// Searching for balanced hypergraphs with small matching number.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbh/hypergraph.hpp"

namespace fbh {

struct BmReport {
  std::vector<int> sides;
  bool exhaustive = false;
  std::optional<int> min_nu;  // empty when no balanced hypergraph was met
  std::optional<PartiteHypergraph> witness;
  long long examined = 0;            // edge sets (exhaustive) or trials (sampled)
  long long balanced = 0;            // of those, fractionally balanced
  std::map<int, long long> nu_histogram;
  std::uint64_t seed = 0;
};

/// Every edge set of the complete d-partite hypergraph, one per orbit under
/// relabeling inside each side, with at most edge_cap edges (0 = no cap).
/// Requires at most 9 potential edges. min_nu is then exactly the largest m
/// with (a_1,...,a_d) -> m.
BmReport bm_search_exhaustive(const std::vector<int>& sides, int edge_cap = 0);

struct SampleOptions {
  std::uint64_t seed = 1;
  long long trials = 1000;
  int threads = 1;
  std::string checkpoint;  // resume from and save to this file when nonempty
  long long checkpoint_every = 1000;
};

/// Random trials: a random subset of potential edges, a random objective over
/// the balanced polytope of that subset, and nu of the support of the optimal
/// vertex. Trial t depends only on (seed, t), so results do not depend on the
/// thread count. Ties on nu keep the earliest trial's witness.
BmReport bm_search_sampled(const std::vector<int>& sides, const SampleOptions& options);

}  // namespace fbh
