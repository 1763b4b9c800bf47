// Families of d-intervals: piercing with per-component budgets and rainbow
// matchings.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fbh/rational.hpp"

namespace fbh {

/// Open interval (lo, hi) with 0 <= lo < hi <= 1.
struct OpenInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// One open interval on each of the components C_1..C_d.
struct DInterval {
  std::vector<OpenInterval> parts;

  int d() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const DInterval&, const DInterval&) = default;
};

/// Throws unless every part satisfies 0 <= lo < hi <= 1.
void check_dinterval(const DInterval& x);

/// Disjoint means disjoint on every component.
bool disjoint(const DInterval& a, const DInterval& b);

struct DIntervalFamilies {
  int d = 0;
  std::vector<std::vector<DInterval>> families;
};

/// Points per component; a cover has points[t].size() <= budgets[t].
using CoverPoints = std::vector<std::vector<Rational>>;

/// A choice of at most budgets[t] points on each C_t meeting every member of
/// the family, or nullopt if none exists. Candidates are midpoints of the
/// atomic segments cut out by all endpoints.
std::optional<CoverPoints> coverable(const std::vector<DInterval>& family, const std::vector<int>& budgets);

/// One member (family index, member index) from distinct families, pairwise
/// disjoint, of size >= target; nullopt if no such choice exists.
std::optional<std::vector<std::pair<int, int>>> rainbow_matching(const DIntervalFamilies& fams, int target);

/// True iff no family can be covered with a_t - 1 points on each C_t.
bool im_premise_check(const DIntervalFamilies& fams, const std::vector<int>& a);

}  // namespace fbh
