#include "fbh/dinterval.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fbh {

void check_dinterval(const DInterval& x) {
  for (const auto& p : x.parts)
    if (!(0 <= p.lo && p.lo < p.hi && p.hi <= 1)) throw std::invalid_argument("need 0 <= lo < hi <= 1");
}

bool disjoint(const DInterval& a, const DInterval& b) {
  if (a.d() != b.d()) throw std::invalid_argument("d-intervals of different d");
  for (int t = 0; t < a.d(); ++t) {
    const auto& p = a.parts[t];
    const auto& q = b.parts[t];
    if (p.lo < q.hi && q.lo < p.hi) return false;
  }
  return true;
}

std::optional<CoverPoints> coverable(const std::vector<DInterval>& family, const std::vector<int>& budgets) {
  const int d = static_cast<int>(budgets.size());
  for (const auto& x : family) {
    check_dinterval(x);
    if (x.d() != d) throw std::invalid_argument("budget count differs from d");
  }
  std::vector<std::vector<Rational>> candidates(d);
  for (int t = 0; t < d; ++t) {
    std::set<Rational> ends{Rational(0), Rational(1)};
    for (const auto& x : family) {
      ends.insert(x.parts[t].lo);
      ends.insert(x.parts[t].hi);
    }
    for (auto it = ends.begin(); std::next(it) != ends.end(); ++it)
      candidates[t].push_back((*it + *std::next(it)) / 2);
  }

  std::vector<int> left = budgets;
  CoverPoints chosen(d);
  // Branch on the first member no chosen point pierces: some point inside one
  // of its parts must be chosen.
  std::function<bool()> search = [&]() {
    const DInterval* open = nullptr;
    for (const auto& x : family) {
      bool hit = false;
      for (int t = 0; t < d && !hit; ++t)
        for (const auto& p : chosen[t])
          if (x.parts[t].contains(p)) {
            hit = true;
            break;
          }
      if (!hit) {
        open = &x;
        break;
      }
    }
    if (open == nullptr) return true;
    for (int t = 0; t < d; ++t) {
      if (left[t] == 0) continue;
      for (const auto& p : candidates[t]) {
        if (!open->parts[t].contains(p)) continue;
        --left[t];
        chosen[t].push_back(p);
        if (search()) return true;
        chosen[t].pop_back();
        ++left[t];
      }
    }
    return false;
  };
  if (!search()) return std::nullopt;
  for (auto& pts : chosen) std::sort(pts.begin(), pts.end());
  return chosen;
}

std::optional<std::vector<std::pair<int, int>>> rainbow_matching(const DIntervalFamilies& fams, int target) {
  for (const auto& fam : fams.families)
    for (const auto& x : fam) {
      check_dinterval(x);
      if (x.d() != fams.d) throw std::invalid_argument("member with the wrong d");
    }
  const int n = static_cast<int>(fams.families.size());
  std::vector<std::pair<int, int>> picked;
  std::function<bool(int)> search = [&](int i) {
    if (static_cast<int>(picked.size()) >= target) return true;
    if (static_cast<int>(picked.size()) + (n - i) < target) return false;
    for (int j = 0; j < static_cast<int>(fams.families[i].size()); ++j) {
      const auto& x = fams.families[i][j];
      const bool free = std::all_of(picked.begin(), picked.end(), [&](const auto& pr) {
        return disjoint(fams.families[pr.first][pr.second], x);
      });
      if (!free) continue;
      picked.emplace_back(i, j);
      if (search(i + 1)) return true;
      picked.pop_back();
    }
    return search(i + 1);
  };
  if (!search(0)) return std::nullopt;
  return picked;
}

bool im_premise_check(const DIntervalFamilies& fams, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != fams.d) throw std::invalid_argument("need one a_t per component");
  std::vector<int> budgets;
  for (int x : a) {
    if (x < 1) throw std::invalid_argument("a_t must be at least 1");
    budgets.push_back(x - 1);
  }
  for (const auto& fam : fams.families)
    if (coverable(fam, budgets)) return false;
  return true;
}

}  // namespace fbh
