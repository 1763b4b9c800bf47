// Multi-cake division instances, placatable sets and grid search.
#pragma once

#include <functional>
#include <vector>

#include "fbh/hypergraph.hpp"
#include "fbh/rational.hpp"

namespace fbh {

/// Slice lengths per cake, each cake summing to 1.
using Partition = std::vector<std::vector<Rational>>;

/// Throws unless the shape matches `slices` and every cake sums to 1 with
/// nonnegative lengths.
void check_partition(const Partition& p, const std::vector<int>& slices);

struct DivisionInstance {
  int agents = 0;
  std::vector<int> slices;  // a_1..a_d
  /// Acceptable slice tuples (1-based) of agent i (0-based) at P.
  std::function<std::vector<Edge>(int, const Partition&)> accepts;
};

/// 2n-2 agents, two cakes of n slices.
DivisionInstance instance_2n2_nn(int n);

/// n agents, cakes of n and 2n-2 slices.
DivisionInstance instance_nn_2n2(int n);

struct Placation {
  int size = 0;
  std::vector<std::pair<int, Edge>> assignment;  // (agent, tuple)
};

/// Largest set of agents given acceptable, coordinate-wise distinct tuples.
Placation nu_D(const DivisionInstance& inst, const Partition& p);

struct GridResult {
  int best = 0;
  Partition argmax;
  long long points = 0;
};

/// Max of nu_D over all partitions with lengths in {0, 1/q, ..., 1}; the
/// first maximizer in enumeration order is reported.
GridResult grid_max(const DivisionInstance& inst, int q);

/// Every agent's list at P holds a tuple of nonempty slices.
bool hungry_at(const DivisionInstance& inst, const Partition& p);

/// Calls visit on every grid partition at resolution q; stops when visit
/// returns false.
void for_each_grid_partition(const std::vector<int>& slices, int q,
                             const std::function<bool(const Partition&)>& visit);

}  // namespace fbh
