#include "fbh/search.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "fbh/io.hpp"
#include "fbh/lp.hpp"

namespace fbh {

namespace {

std::vector<Edge> universe(const std::vector<int>& sides) {
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

void check_sides(const std::vector<int>& sides) {
  if (sides.empty()) throw std::invalid_argument("need at least one side");
  for (int a : sides)
    if (a < 1) throw std::invalid_argument("side sizes must be at least 1");
}

// Every product of side-internal permutations, as a map on universe positions.
std::vector<std::vector<int>> relabelings(const std::vector<int>& sides, const std::vector<Edge>& all) {
  std::vector<std::vector<std::vector<int>>> per_side;
  for (int a : sides) {
    std::vector<int> p(a);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    per_side.push_back(std::move(perms));
  }
  std::map<Edge, int> position;
  for (std::size_t i = 0; i < all.size(); ++i) position[all[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> choice(sides.size(), 0);
  for (;;) {
    std::vector<int> map(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      Edge e = all[i];
      for (std::size_t t = 0; t < sides.size(); ++t) e[t] = per_side[t][choice[t]][e[t] - 1];
      map[i] = position.at(e);
    }
    out.push_back(std::move(map));
    std::size_t t = sides.size();
    while (t > 0 && choice[t - 1] + 1 == per_side[t - 1].size()) choice[--t] = 0;
    if (t == 0) return out;
    ++choice[t - 1];
  }
}

bool covers_all(const std::vector<int>& sides, const std::vector<Edge>& edges) {
  for (std::size_t t = 0; t < sides.size(); ++t) {
    std::vector<char> seen(sides[t], 0);
    for (const auto& e : edges) seen[e[t] - 1] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

void record(BmReport& report, int value, const PartiteHypergraph& h) {
  ++report.balanced;
  ++report.nu_histogram[value];
  if (!report.min_nu || value < *report.min_nu) {
    report.min_nu = value;
    report.witness = h;
  }
}

struct Trial {
  bool balanced = false;
  int nu = 0;
  std::vector<Edge> support;
};

Trial run_trial(const std::vector<int>& sides, const std::vector<Edge>& all, std::uint64_t seed, long long t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
  std::mt19937_64 rng(seq);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution keep(density);
  std::vector<Edge> chosen;
  for (const auto& e : all)
    if (keep(rng)) chosen.push_back(e);
  Trial out;
  if (chosen.empty() || !covers_all(sides, chosen)) return out;

  LPProblem lp(chosen.size(), Sense::Minimize);
  std::uniform_int_distribution<int> cost(1, 1000);
  for (auto& c : lp.objective) c = cost(rng);
  for (std::size_t s = 0; s < sides.size(); ++s)
    for (int v = 1; v <= sides[s]; ++v) {
      std::vector<Rational> row(chosen.size());
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i][s] == v) row[i] = 1;
      lp.add(std::move(row), Relation::Equal, Rational(1, sides[s]));
    }
  const auto result = lp_solve(lp);
  if (result.status != LPStatus::Optimal) return out;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (result.point[i] > 0) out.support.push_back(chosen[i]);
  out.balanced = true;
  out.nu = nu(PartiteHypergraph(sides, out.support));
  return out;
}

io::Json checkpoint_json(const BmReport& r, long long done) {
  io::Json j;
  j["sides"] = r.sides;
  j["seed"] = r.seed;
  j["trials_done"] = done;
  j["balanced"] = r.balanced;
  io::Json hist = io::Json::object();
  for (auto [v, c] : r.nu_histogram) hist[std::to_string(v)] = c;
  j["nu_histogram"] = hist;
  if (r.min_nu) {
    j["min_nu"] = *r.min_nu;
    j["witness"] = r.witness->edges();
  }
  return j;
}

}  // namespace

BmReport bm_search_exhaustive(const std::vector<int>& sides, int edge_cap) {
  check_sides(sides);
  const auto all = universe(sides);
  if (all.size() > 9) throw std::invalid_argument("exhaustive search is limited to 9 potential edges");
  const auto maps = relabelings(sides, all);
  BmReport report;
  report.sides = sides;
  report.exhaustive = true;
  const unsigned full = 1u << all.size();
  for (unsigned mask = 1; mask < full; ++mask) {
    if (edge_cap > 0 && std::popcount(mask) > edge_cap) continue;
    bool smallest = true;
    for (const auto& map : maps) {
      unsigned image = 0;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask & (1u << i)) image |= 1u << map[i];
      if (image < mask) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    ++report.examined;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    if (!covers_all(sides, edges)) continue;
    PartiteHypergraph h(sides, std::move(edges));
    if (!balanced_certificate(h)) continue;
    record(report, nu(h), h);
  }
  return report;
}

BmReport bm_search_sampled(const std::vector<int>& sides, const SampleOptions& options) {
  check_sides(sides);
  if (options.trials < 0 || options.threads < 1 || options.checkpoint_every < 1)
    throw std::invalid_argument("bad sampling options");
  const auto all = universe(sides);
  BmReport report;
  report.sides = sides;
  report.seed = options.seed;
  long long done = 0;

  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    const auto j = io::read_file(options.checkpoint);
    if (j.at("sides").get<std::vector<int>>() != sides || j.at("seed").get<std::uint64_t>() != options.seed)
      throw std::invalid_argument("checkpoint belongs to different sides or seed");
    done = std::min(j.at("trials_done").get<long long>(), options.trials);
    report.balanced = j.at("balanced").get<long long>();
    for (auto& [k, v] : j.at("nu_histogram").items()) report.nu_histogram[std::stoi(k)] = v.get<long long>();
    if (j.contains("min_nu")) {
      report.min_nu = j.at("min_nu").get<int>();
      report.witness = PartiteHypergraph(sides, j.at("witness").get<std::vector<Edge>>());
    }
  }

  while (done < options.trials) {
    const long long chunk = std::min(options.checkpoint_every, options.trials - done);
    std::vector<Trial> results(chunk);
    std::vector<std::thread> pool;
    for (int w = 0; w < options.threads; ++w)
      pool.emplace_back([&, w] {
        for (long long i = w; i < chunk; i += options.threads)
          results[i] = run_trial(sides, all, options.seed, done + i);
      });
    for (auto& th : pool) th.join();
    for (auto& r : results)
      if (r.balanced) record(report, r.nu, PartiteHypergraph(sides, std::move(r.support)));
    done += chunk;
    if (!options.checkpoint.empty()) io::write_file(options.checkpoint, checkpoint_json(report, done));
  }
  report.examined = done;
  return report;
}

}  // namespace fbh
