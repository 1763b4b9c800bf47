#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fbh/topology.hpp"

namespace fbh {

HallReport hall_check(const PartiteHypergraph& h, int deficiency) {
  if (h.d() != 3) throw std::invalid_argument("hall_check needs a tripartite hypergraph");
  const int a1 = h.sides()[0];
  if (a1 > 12) throw std::invalid_argument("hall_check enumerates 2^|side 1| subsets; at most 12 allowed");
  if (deficiency < 0) throw std::invalid_argument("deficiency must be nonnegative");

  // Smaller K first, so a failing singleton is reported before its supersets.
  std::vector<unsigned> subsets;
  for (unsigned mask = 1; mask < (1u << a1); ++mask) subsets.push_back(mask);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });

  HallReport report;
  for (unsigned mask : subsets) {
    const int need = std::popcount(mask) - deficiency;
    if (need <= 0) continue;
    std::vector<int> k;
    for (int x = 1; x <= a1; ++x)
      if (mask & (1u << (x - 1))) k.push_back(x);
    const Multigraph nk = neighborhood(h, k);
    if (nk.edges.size() > 64)
      throw std::invalid_argument("neighbourhood has more than 64 edges");
    if (!eta_independence(line_graph(nk), need).reaches(need)) {
      report.failing_k = std::move(k);
      return report;
    }
  }
  report.all_k_pass = true;
  auto matching = maximum_matching(h);
  const auto want = static_cast<std::size_t>(std::max(0, a1 - deficiency));
  if (matching.size() >= want) {
    matching.resize(want);
    report.matching = std::move(matching);
  }
  return report;
}

}  // namespace fbh
