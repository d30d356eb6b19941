#include "circum/verify.hpp"

#include <chrono>
#include <random>

#include "circum/bounds.hpp"
#include "circum/corpus.hpp"
#include "circum/cycle.hpp"
#include "circum/figures.hpp"
#include "circum/long_cycle.hpp"
#include "circum/oracle.hpp"

namespace circum {

namespace {

constexpr std::size_t kKeptFailures = 20;

bool adjacent(const Edge& a, const Edge& b) { return b.touches(a.u) || b.touches(a.v); }

struct Runner {
  const VerifyOptions& opt;
  VerifyReport& rep;

  void fail(const std::string& tag, const std::string& what) {
    ++rep.failed;
    if (rep.failures.size() < kKeptFailures) rep.failures.push_back(tag + ": " + what);
  }

  void run(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f, const std::string& tag) {
    ++rep.instances;
    LongCycleOptions lo;
    const auto t0 = std::chrono::steady_clock::now();
    CycleResult r;
    try {
      r = long_cycle(g, w, e, f, lo);
    } catch (const Error& err) {
      fail(tag, err.what());
      return;
    }
    rep.max_ms = std::max(rep.max_ms,
                          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    for (const auto& [k, v] : r.stats.histogram) rep.histogram[k] += v;
    if (!is_valid_cycle(g, r.cycle) || !contains_edge(r.cycle, e) || !contains_edge(r.cycle, f))
      return fail(tag, "returned edges are not a cycle through e and f");
    if (cycle_weight(g, w, r.cycle) != r.weight) return fail(tag, "reported weight differs from the cycle");
    const BoundKind kind = adjacent(g.edge(e), g.edge(f)) ? BoundKind::Adjacent : BoundKind::Nonadjacent;
    if (r.bound != bound(kind, w.total(g)) || !meets(r.weight, r.bound))
      return fail(tag, "weight " + std::to_string(r.weight) + " below bound " + std::to_string(r.bound));
    if (g.order() <= opt.oracle_nmax) {
      ++rep.oracle_checked;
      OracleResult o = oracle_max_cycle(g, w, e, f);
      if (!o.found || r.weight > o.weight)
        return fail(tag, "weight " + std::to_string(r.weight) + " above the oracle's " + std::to_string(o.weight));
    }
    ++rep.passed;
  }
};

std::vector<std::pair<EdgeId, EdgeId>> pairs_where(const MultiGraph& g, int kind) {
  // kind 0: adjacent, 1: joined by a third edge, 2: farther apart
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (const Edge& a : g.edges())
    for (const Edge& b : g.edges()) {
      if (a.id >= b.id) continue;
      if (adjacent(a, b)) {
        if (kind == 0 && !(b.touches(a.u) && b.touches(a.v))) out.push_back({a.id, b.id});
        continue;
      }
      bool bridged = false;
      for (const Edge& c : g.edges())
        if (adjacent(c, a) && adjacent(c, b)) bridged = true;
      if ((kind == 1) == bridged && kind != 0) out.push_back({a.id, b.id});
    }
  return out;
}

std::vector<WeightMap> weightings(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<WeightMap> out(3);
  std::uniform_int_distribution<Weight> unit(0, 10);
  for (VertexId v : g.vertices()) out[0].set(v, unit(rng));
  const VertexId heavy = g.vertices()[rng() % g.order()];
  for (VertexId v : g.vertices()) out[2].set(v, v == heavy ? 100 : 1);
  return out;
}

}  // namespace

const std::vector<std::string>& coverage_labels() {
  static const std::vector<std::string> labels = {
      "L6.claim1", "L6.claim2", "L6.claim3", "L6.claim4", "L6.claim5", "L6.case1", "L6.case1.vhs", "L6.case2",
      "L7.claim1", "L7.claim2", "L7.claim3", "L7.claim4", "L7.claim5", "L7.claim6", "L7.claim7", "L7.claim8",
      "L7.q0",     "L7.q1",     "L7.q2",     "base"};
  return labels;
}

VerifyReport verify(const VerifyOptions& opt) {
  if (opt.trials < 0 || opt.nmax < 4) throw Error(ErrorCode::InvalidGraph, "need trials >= 0 and nmax >= 4");
  VerifyReport rep;
  Runner run{opt, rep};
  std::mt19937_64 rng(opt.seed);

  if (opt.corpus) {
    for (const NamedGraph& ng : named_corpus()) {
      const MultiGraph& g = ng.graph;
      std::vector<WeightMap> ws = weightings(g, rng);
      for (const Edge& a : g.edges())
        for (const Edge& b : g.edges()) {
          if (a.id >= b.id || (b.touches(a.u) && b.touches(a.v))) continue;
          for (std::size_t k = 0; k < ws.size(); ++k)
            run.run(g, ws[k], a.id, b.id, ng.name + " e=" + std::to_string(a.id) + " f=" + std::to_string(b.id));
        }
    }
    for (const Instance& in : figure_corpus()) run.run(in.graph, in.weights, in.e, in.f, in.name);
  }

  const int top = opt.nmax - opt.nmax % 2;
  for (int t = 0; t < opt.trials; ++t) {
    const int n = 4 + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>((top - 4) / 2 + 1));
    const std::uint64_t gseed = rng();
    MultiGraph g = random_cubic_3connected(n, gseed);
    std::vector<WeightMap> ws = weightings(g, rng);
    for (int kind = 0; kind < 3; ++kind) {
      auto ps = pairs_where(g, kind);
      if (ps.empty()) continue;
      auto [e, f] = ps[rng() % ps.size()];
      for (std::size_t k = 0; k < ws.size(); ++k)
        run.run(g, ws[k], e, f,
                "trial " + std::to_string(t) + " n=" + std::to_string(n) + " e=" + std::to_string(e) +
                    " f=" + std::to_string(f) + " weighting " + std::to_string(k));
    }
  }

  for (const std::string& l : coverage_labels())
    if (!rep.histogram.count(l)) rep.missing.push_back(l);
  return rep;
}

nlohmann::json to_json(const VerifyReport& r) {
  return {{"instances", r.instances}, {"passed", r.passed},     {"failed", r.failed},
          {"oracle_checked", r.oracle_checked}, {"histogram", r.histogram}, {"failures", r.failures},
          {"missing_branches", r.missing}};
}

}  // namespace circum
