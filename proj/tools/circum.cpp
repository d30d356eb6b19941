#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "circum/bounds.hpp"
#include "circum/corpus.hpp"
#include "circum/eulerian.hpp"
#include "circum/io.hpp"
#include "circum/long_cycle.hpp"
#include "circum/oracle.hpp"
#include "circum/verify.hpp"

using namespace circum;
using nlohmann::json;

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidGraph:
    case ErrorCode::ParseError:
    case ErrorCode::SameEdge:
    case ErrorCode::ForeignEdge:
    case ErrorCode::NotTwoConnected:
    case ErrorCode::NotThreeConnected:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::OddOrder:
    case ErrorCode::DegreeTooSmall:
      return 2;
    default:
      return 1;
  }
}

std::string edge_list(const std::vector<EdgeId>& es) {
  std::string s;
  for (EdgeId e : es) s += (s.empty() ? "" : " ") + std::to_string(e);
  return s;
}

int cmd_longcycle(const std::string& path, EdgeId e, EdgeId f, bool as_json, const std::string& trace) {
  WeightedGraph wg = load_graph(path);
  LongCycleOptions opt;
  opt.record_trace = !trace.empty();
  CycleResult r = long_cycle(wg.graph, wg.weights, e, f, opt);
  if (!trace.empty()) {
    std::ofstream out(trace);
    if (!out) throw Error(ErrorCode::InvalidGraph, "cannot write " + trace);
    out << to_json(r.trace).dump(1) << "\n";
  }
  if (as_json) {
    std::cout << json{{"cycle", r.cycle.edges}, {"weight", r.weight}, {"bound", r.bound},
                      {"kind", to_string(r.kind)}, {"stats", to_json(r.stats)}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << "cycle " << edge_list(r.cycle.edges) << "\n"
              << "weight " << r.weight << "\n"
              << "bound " << r.bound << " (" << to_string(r.kind) << ")\n";
  }
  return 0;
}

int cmd_eulerian(const std::string& path, EdgeId e, std::optional<EdgeId> f, bool as_json) {
  WeightedGraph wg = load_graph(path);
  EulerianResult r = eulerian_subgraph(wg.graph, wg.weights, e, f);
  if (as_json) {
    std::cout << json{{"edges", r.edges},
                      {"vertices", r.vertices},
                      {"weight", r.weight},
                      {"bound", r.bound},
                      {"kind", to_string(r.kind)},
                      {"lifted_order", r.lifted.graph.order()},
                      {"partner", r.partner}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << "edges " << edge_list(r.edges) << "\n"
              << "weight " << r.weight << "\n"
              << "bound " << r.bound << " (" << to_string(r.kind) << ")\n"
              << "lifted order " << r.lifted.graph.order() << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& path, std::optional<EdgeId> e, std::optional<EdgeId> f, std::int64_t budget) {
  WeightedGraph wg = load_graph(path);
  OracleResult r = oracle_max_cycle(wg.graph, wg.weights, e, f, budget);
  if (!r.found) {
    std::cout << "no cycle\n";
    return 0;
  }
  std::cout << "cycle " << edge_list(r.cycle.edges) << "\n"
            << "weight " << r.weight << "\n";
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, const std::string& weights, const std::string& out) {
  Weight max = 0;
  if (!weights.empty()) {
    if (weights.rfind("max:", 0) != 0) throw Error(ErrorCode::InvalidGraph, "--weights expects max:K");
    try {
      max = std::stoll(weights.substr(4));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidGraph, "--weights expects max:K");
    }
    if (max < 0) throw Error(ErrorCode::InvalidGraph, "weights must be nonnegative");
  }
  MultiGraph g = random_cubic_3connected(n, seed);
  WeightMap w;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> pick(0, max);
  for (VertexId v : g.vertices()) w.set(v, pick(rng));
  std::string text = to_text(g, w);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::InvalidGraph, "cannot write " + out);
    f << text;
  }
  return 0;
}

int cmd_verify(int trials, int nmax, std::uint64_t seed, bool as_json) {
  VerifyOptions opt;
  opt.trials = trials;
  opt.nmax = nmax;
  opt.seed = seed;
  VerifyReport r = verify(opt);
  if (as_json) {
    std::cout << to_json(r).dump(1) << "\n";
  } else {
    std::cout << "instances " << r.instances << "  passed " << r.passed << "  failed " << r.failed
              << "  oracle-checked " << r.oracle_checked << "\n"
              << "max runtime " << r.max_ms << " ms\n";
    for (const auto& [k, v] : r.histogram) std::cout << "  " << k << " " << v << "\n";
    for (const std::string& m : r.missing) std::cout << "never reached: " << m << "\n";
    for (const std::string& m : r.failures) std::cout << "FAIL " << m << "\n";
  }
  return r.failed == 0 ? 0 : 1;
}

int cmd_bounds(int grid_max, bool as_json) {
  const BoundConstants& k = constants();
  RootResult root = optimal_exponent(1e-15);
  json j;
  j["r"] = k.r;
  j["c"] = k.c;
  j["alpha"] = k.alpha;
  j["beta"] = k.beta;
  j["d"] = k.d;
  j["optimal_exponent"] = {{"root", root.root}, {"residual", root.residual}, {"iterations", root.iterations}};
  j["constants"] = json::array();
  for (const NamedConstant& c : proof_constants_report())
    j["constants"].push_back({{"name", c.name}, {"expression", c.expression}, {"value", c.value}, {"printed", c.printed}});
  j["grid"] = json::array();
  bool ok = true;
  for (int p = 1; p <= 6; ++p) {
    GridSummary s = grid_check(static_cast<Lemma4Part>(p), grid_max, 100000, 1);
    ok = ok && s.failures == 0;
    j["grid"].push_back({{"part", to_string(s.part)},
                         {"checked", s.checked},
                         {"vacuous", s.vacuous},
                         {"failures", s.failures},
                         {"exhaustive", s.exhaustive}});
  }
  if (as_json) {
    std::cout << j.dump(1) << "\n";
    return ok ? 0 : 1;
  }
  std::printf("r      %.6f\nc      %.6f\nalpha  %.6f\nbeta   %.6f\nd      %.6f\n", k.r, k.c, k.alpha, k.beta, k.d);
  std::printf("optimal exponent %.9f  residual %.3g  (%d steps)\n", root.root, root.residual, root.iterations);
  for (const NamedConstant& c : proof_constants_report()) {
    if (c.printed != 0)
      std::printf("%-17s %-40s %.6g  (printed %.6g)\n", c.name.c_str(), c.expression.c_str(), c.value, c.printed);
    else
      std::printf("%-17s %-40s %.6g\n", c.name.c_str(), c.expression.c_str(), c.value);
  }
  for (const auto& g : j["grid"])
    std::printf("grid %-4s checked %-9lld vacuous %-9lld failures %lld%s\n", g["part"].get<std::string>().c_str(),
                g["checked"].get<long long>(), g["vacuous"].get<long long>(), g["failures"].get<long long>(),
                g["exhaustive"].get<bool>() ? "" : "  (sampled)");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long cycles through two edges in 3-connected cubic graphs"};
  app.require_subcommand(1);

  std::string graph, trace, out, weights;
  EdgeId e = kNoEdge, f = kNoEdge;
  bool as_json = false;
  std::int64_t budget = 0;
  int n = 0, trials = 100, nmax = 12, grid_max = 50;
  std::uint64_t seed = 7;

  auto* lc = app.add_subcommand("longcycle", "heavy cycle through two edges of a cubic graph");
  lc->add_option("--graph", graph)->required();
  lc->add_option("--e", e)->required();
  lc->add_option("--f", f)->required();
  lc->add_flag("--json", as_json);
  lc->add_option("--trace", trace, "write the derivation trace as JSON");

  auto* eu = app.add_subcommand("eulerian", "heavy Eulerian subgraph of a 3-edge-connected graph");
  eu->add_option("--graph", graph)->required();
  eu->add_option("--e", e)->required();
  auto* eu_f = eu->add_option("--f", f);
  eu->add_flag("--json", as_json);

  auto* orc = app.add_subcommand("oracle", "exact heaviest cycle by exhaustive search");
  orc->add_option("--graph", graph)->required();
  auto* orc_e = orc->add_option("--e", e);
  auto* orc_f = orc->add_option("--f", f)->needs(orc_e);
  orc->add_option("--budget-ms", budget);

  auto* gen = app.add_subcommand("gen", "random 3-connected cubic graph");
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--weights", weights, "max:K for uniform weights in 0..K");
  gen->add_option("--out", out);

  auto* ver = app.add_subcommand("verify", "randomised end-to-end check against the oracle");
  ver->add_option("--trials", trials);
  ver->add_option("--nmax", nmax);
  ver->add_option("--seed", seed);
  ver->add_flag("--json", as_json);

  auto* bnd = app.add_subcommand("bounds", "constants, optimal exponent and inequality grid checks");
  bnd->add_option("--grid-max", grid_max);
  bnd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*lc) return cmd_longcycle(graph, e, f, as_json, trace);
    if (*eu) return cmd_eulerian(graph, e, *eu_f ? std::optional<EdgeId>(f) : std::nullopt, as_json);
    if (*orc)
      return cmd_oracle(graph, *orc_e ? std::optional<EdgeId>(e) : std::nullopt,
                        *orc_f ? std::optional<EdgeId>(f) : std::nullopt, budget);
    if (*gen) return cmd_gen(n, seed, weights, out);
    if (*ver) return cmd_verify(trials, nmax, seed, as_json);
    if (*bnd) return cmd_bounds(grid_max, as_json);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code(err.code());
  }
  return 2;
}
