// fbh: command-line front end. Every subcommand prints a JSON document to
// stdout and, with --out, also writes it to a file.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fbh/cake.hpp"
#include "fbh/constructions.hpp"
#include "fbh/dinterval.hpp"
#include "fbh/hilbert.hpp"
#include "fbh/io.hpp"
#include "fbh/search.hpp"
#include "fbh/topology.hpp"
#include "fbh/verify.hpp"

namespace {

using fbh::io::Json;

constexpr int kUsage = 2;

struct Global {
  std::string out;
  std::uint64_t seed = 20260516;
  int threads = 1;
};

// Thrown for bad input that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Global& g, const Json& j) {
  std::cout << j.dump(2) << '\n';
  if (!g.out.empty()) fbh::io::write_file(g.out, j);
}

Json load(const std::string& path) {
  try {
    return fbh::io::read_file(path);
  } catch (const std::exception& e) {
    throw UsageError("cannot read " + path + ": " + e.what());
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("expected at least one integer");
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

Json bm_json(const fbh::BmReport& r) {
  Json j;
  j["sides"] = r.sides;
  j["exhaustive"] = r.exhaustive;
  j["min_nu"] = r.min_nu ? Json(*r.min_nu) : Json(nullptr);
  j["witness"] = r.witness ? fbh::io::to_json(*r.witness) : Json(nullptr);
  j["examined"] = r.examined;
  j["balanced"] = r.balanced;
  Json hist = Json::object();
  for (auto [v, c] : r.nu_histogram) hist[std::to_string(v)] = c;
  j["nu_histogram"] = hist;
  if (!r.exhaustive) j["seed"] = r.seed;
  return j;
}

fbh::DivisionInstance cake_instance(const std::string& kind, int n) {
  if (kind == "2n2nn") return fbh::instance_2n2_nn(n);
  if (kind == "nn2n2") return fbh::instance_nn_2n2(n);
  throw UsageError("unknown cake instance '" + kind + "' (use 2n2nn or nn2n2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractionally balanced hypergraphs: matchings, connectivity, constructions, searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--out", g.out, "Also write the JSON result to this file");
  app.add_option("--seed", g.seed, "Seed for randomized work");
  app.add_option("--threads", g.threads, "Worker threads for sampling")->check(CLI::PositiveNumber);

  std::string in;
  int cap = 6, deficiency = 0;

  auto* nu_cmd = app.add_subcommand("nu", "Matching number and a maximum matching of a hypergraph");
  nu_cmd->add_option("--in", in, "Hypergraph JSON {sides, edges}")->required();

  auto* nustar_cmd = app.add_subcommand("nustar", "Fractional matching number");
  nustar_cmd->add_option("--in", in, "Hypergraph JSON")->required();

  auto* balance_cmd = app.add_subcommand("balance", "Balanced weighting normalized to total 1, or null");
  balance_cmd->add_option("--in", in, "Hypergraph JSON")->required();

  bool eta_graph = false;
  auto* eta_cmd = app.add_subcommand("eta", "Homological connectivity of a complex or of I(G)");
  eta_cmd->add_option("--in", in, "Complex JSON {vertices, facets}, or a graph with --graph")->required();
  eta_cmd->add_flag("--graph", eta_graph, "Input is a graph; use its independence complex");
  eta_cmd->add_option("--cap", cap, "Stop scanning at this value")->check(CLI::NonNegativeNumber);

  auto* psi_cmd = app.add_subcommand("psi", "Value of the explosion game");
  psi_cmd->add_option("--in", in, "Graph JSON {vertices, edges}")->required();

  auto* hall_cmd = app.add_subcommand("hall-check", "Topological Hall condition on a tripartite hypergraph");
  hall_cmd->add_option("--in", in, "Hypergraph JSON")->required();
  hall_cmd->add_option("--deficiency", deficiency, "Allowed deficiency")->check(CLI::NonNegativeNumber);

  std::string family, r_text = "1";
  int n = 0, k = 0, q = 0, variant = 1, param = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named construction");
  construct_cmd
      ->add_option("family", family,
                   "pasch, nnn, drisko, mlessn, mlessn2, main-negative, zeta, projective, conj-nn")
      ->required();
  construct_cmd->add_option("--n", n, "Main size parameter");
  construct_cmd->add_option("--k", k, "Side size k");
  construct_cmd->add_option("--r", r_text, "Rational r for main-negative");
  construct_cmd->add_option("--q", q, "Order for projective");
  construct_cmd->add_option("--variant", variant, "conj-nn variant 1..4");
  construct_cmd->add_option("--param", param, "conj-nn variant parameter (0 = default)");

  std::string sides_text;
  long long norm_cap = 0;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert basis of integral balanced functions");
  hilbert_cmd->add_option("--sides", sides_text, "Side sizes, e.g. 2,4")->required();
  hilbert_cmd->add_option("--cap", norm_cap, "Largest norm to enumerate")->required();

  std::string budgets_text;
  int target = 0;
  auto* dint_cmd = app.add_subcommand("dinterval", "d-interval covers and rainbow matchings");
  dint_cmd->require_subcommand(1);
  auto* cover_cmd = dint_cmd->add_subcommand("cover", "Pierce one family with budgeted points");
  cover_cmd->add_option("--in", in, "Families JSON; the first family is used")->required();
  cover_cmd->add_option("--budgets", budgets_text, "Points per component, e.g. 1,1")->required();
  auto* rainbow_cmd = dint_cmd->add_subcommand("rainbow", "Rainbow matching across families");
  rainbow_cmd->add_option("--in", in, "Families JSON")->required();
  rainbow_cmd->add_option("--target", target, "Required size")->required();

  std::string kind;
  auto* cake_cmd = app.add_subcommand("cake", "Two-cake division instances");
  cake_cmd->require_subcommand(1);
  auto* cake_check = cake_cmd->add_subcommand("check", "nu^D at one partition");
  cake_check->add_option("--instance", kind, "2n2nn or nn2n2")->required();
  cake_check->add_option("--n", n, "Instance size")->required();
  cake_check->add_option("--partition", in, "Partition JSON")->required();
  auto* cake_search = cake_cmd->add_subcommand("search", "Maximize nu^D over a grid");
  cake_search->add_option("--instance", kind, "2n2nn or nn2n2")->required();
  cake_search->add_option("--n", n, "Instance size")->required();
  cake_search->add_option("--q", q, "Grid resolution 1/q")->required();

  std::string mode = "exhaustive", checkpoint;
  int edge_cap = 0;
  long long trials = 1000, every = 1000;
  auto* bm_cmd = app.add_subcommand("bm-search", "Smallest nu among balanced hypergraphs of given sizes");
  bm_cmd->add_option("--sides", sides_text, "Side sizes, e.g. 2,2,2")->required();
  bm_cmd->add_option("--mode", mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  bm_cmd->add_option("--edge-cap", edge_cap, "Exhaustive: skip edge sets larger than this (0 = none)");
  bm_cmd->add_option("--trials", trials, "Sampled: number of trials");
  bm_cmd->add_option("--checkpoint", checkpoint, "Sampled: resume from and save progress to this file");
  bm_cmd->add_option("--checkpoint-every", every, "Sampled: trials between checkpoints");

  std::string only, report;
  bool mutant = false;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the acceptance checks");
  verify_cmd->add_option("--only", only, "Comma-separated check ids");
  verify_cmd->add_flag("--mutant", mutant, "Corrupt the Pasch input so its check must fail");
  verify_cmd->add_option("--report", report, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*nu_cmd) {
      const auto h = fbh::io::hypergraph_from(load(in));
      const auto m = fbh::maximum_matching(h);
      emit(g, {{"nu", m.size()}, {"matching", m}});
    } else if (*nustar_cmd) {
      emit(g, {{"nu_star", fbh::io::rational_json(fbh::nu_star(fbh::io::hypergraph_from(load(in))))}});
    } else if (*balance_cmd) {
      const auto cert = fbh::balanced_certificate(fbh::io::hypergraph_from(load(in)));
      emit(g, {{"balanced", cert.has_value()},
               {"certificate", cert ? fbh::io::to_json(*cert)["weights"] : Json(nullptr)}});
    } else if (*eta_cmd) {
      const auto j = load(in);
      const auto c = eta_graph ? fbh::independence_complex(fbh::io::graph_from(j)) : fbh::io::complex_from(j);
      emit(g, {{"eta", fbh::io::to_json(fbh::eta(c, cap))}, {"betti", fbh::betti_numbers(c)}});
    } else if (*psi_cmd) {
      emit(g, {{"psi", fbh::io::to_json(fbh::psi(fbh::io::graph_from(load(in))))}});
    } else if (*hall_cmd) {
      const auto h = fbh::io::hypergraph_from(load(in));
      const auto r = fbh::hall_check(h, deficiency);
      emit(g, {{"all_k_pass", r.all_k_pass},
               {"failing_k", r.failing_k ? Json(*r.failing_k) : Json(nullptr)},
               {"matching", r.matching ? Json(*r.matching) : Json(nullptr)}});
      return r.all_k_pass ? 0 : 1;
    } else if (*construct_cmd) {
      Json j;
      if (family == "pasch") j = fbh::io::to_json(fbh::pasch());
      else if (family == "nnn") j = fbh::io::to_json(fbh::nnn_tight(n));
      else if (family == "drisko") j = fbh::io::to_json(fbh::drisko(n));
      else if (family == "mlessn") j = fbh::io::to_json(fbh::mlessn(k, n));
      else if (family == "mlessn2") j = fbh::io::to_json(fbh::mlessn2(k, n));
      else if (family == "main-negative") j = fbh::io::to_json(fbh::main_negative(n, fbh::parse_rational(r_text), k));
      else if (family == "zeta") j = fbh::io::to_json(fbh::zeta_counterexample(n));
      else if (family == "projective") j = fbh::io::to_json(fbh::truncated_projective(q));
      else if (family == "conj-nn") j = fbh::io::to_json(fbh::conj_nn(n, variant, param));
      else throw UsageError("unknown construction '" + family + "'");
      const auto h = fbh::io::hypergraph_from(j);
      j["nu"] = fbh::nu(h);
      emit(g, j);
    } else if (*hilbert_cmd) {
      const auto result = fbh::hilbert_basis(parse_ints(sides_text), norm_cap);
      Json j;
      if (const auto* b = std::get_if<fbh::HilbertBasis>(&result)) {
        j["complete"] = true;
        j["closure_norm"] = b->closure_norm;
        j["generators"] = Json::array();
        for (const auto& w : b->generators) j["generators"].push_back(fbh::io::to_json(w));
      } else {
        const auto& c = std::get<fbh::CapExceeded>(result);
        j["complete"] = false;
        j["needed_norm"] = c.needed_norm;
        j["partial"] = Json::array();
        for (const auto& w : c.partial) j["partial"].push_back(fbh::io::to_json(w));
      }
      emit(g, j);
    } else if (*cover_cmd) {
      const auto fams = fbh::io::families_from(load(in));
      if (fams.families.empty()) throw UsageError("no families in input");
      const auto cover = fbh::coverable(fams.families.front(), parse_ints(budgets_text));
      Json points = nullptr;
      if (cover) {
        points = Json::array();
        for (const auto& side : *cover) {
          Json row = Json::array();
          for (const auto& p : side) row.push_back(fbh::io::rational_json(p));
          points.push_back(row);
        }
      }
      emit(g, {{"coverable", cover.has_value()}, {"points", points}});
    } else if (*rainbow_cmd) {
      const auto m = fbh::rainbow_matching(fbh::io::families_from(load(in)), target);
      Json picks = nullptr;
      if (m) {
        picks = Json::array();
        for (auto [f, x] : *m) picks.push_back({{"family", f + 1}, {"member", x + 1}});
      }
      emit(g, {{"found", m.has_value()}, {"matching", picks}});
    } else if (*cake_check) {
      const auto inst = cake_instance(kind, n);
      const auto p = fbh::io::partition_from(load(in));
      const auto r = fbh::nu_D(inst, p);
      Json assignment = Json::array();
      for (const auto& [agent, tuple] : r.assignment) assignment.push_back({{"agent", agent + 1}, {"slices", tuple}});
      emit(g, {{"nu_D", r.size}, {"assignment", assignment}, {"hungry", fbh::hungry_at(inst, p)}});
    } else if (*cake_search) {
      const auto r = fbh::grid_max(cake_instance(kind, n), q);
      emit(g, {{"best", r.best}, {"argmax", fbh::io::to_json(r.argmax)}, {"grid_points", r.points}});
    } else if (*bm_cmd) {
      const auto sides = parse_ints(sides_text);
      fbh::BmReport r;
      if (mode == "exhaustive") {
        r = fbh::bm_search_exhaustive(sides, edge_cap);
      } else {
        fbh::SampleOptions o;
        o.seed = g.seed;
        o.trials = trials;
        o.threads = g.threads;
        o.checkpoint = checkpoint;
        o.checkpoint_every = every;
        r = fbh::bm_search_sampled(sides, o);
      }
      emit(g, bm_json(r));
    } else if (*verify_cmd) {
      fbh::verify::Options o;
      o.seed = g.seed;
      o.threads = g.threads;
      o.mutant = mutant;
      std::vector<std::string> ids = only.empty() ? fbh::verify::check_ids() : split(only);
      for (const auto& id : ids)
        if (std::find(fbh::verify::check_ids().begin(), fbh::verify::check_ids().end(), id) ==
            fbh::verify::check_ids().end())
          throw UsageError("unknown check '" + id + "'");
      Json checks = Json::array();
      bool all = true;
      for (const auto& id : ids) {
        const auto r = fbh::verify::run_check(id, o);
        std::cerr << (r.pass ? "PASS " : "FAIL ") << id << " (" << r.seconds << " s)\n";
        for (const auto& f : r.failures) std::cerr << "  " << f << '\n';
        all = all && r.pass;
        checks.push_back(fbh::verify::to_json(r));
      }
      Json j{{"seed", g.seed}, {"mutant", mutant}, {"pass", all}, {"checks", checks}};
      if (!report.empty()) fbh::io::write_file(report, j);
      emit(g, j);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
