#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "circum/bounds.hpp"
#include "circum/connectivity.hpp"
#include "circum/corpus.hpp"
#include "circum/eulerian.hpp"
#include "circum/long_cycle.hpp"
#include "circum/oracle.hpp"
#include "circum/verify.hpp"

using namespace circum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d %-22s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  return ok;
}

struct SweepResult {
  long instances = 0;
  long bound_failures = 0;
  long errors = 0;
  long oracle_checked = 0;
  long sandwich_failures = 0;
  double secs = 0;
  std::string first;
};

SweepResult sweep() {
  SweepResult s;
  auto t0 = Clock::now();
  std::vector<MultiGraph> graphs;
  for (const NamedGraph& ng : named_corpus()) graphs.push_back(ng.graph);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_cubic_3connected(4 + 2 * (i % 6), 1000 + i));
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Weight> pick(0, 10);
  LongCycleOptions opt;
  opt.record_trace = false;
  for (const MultiGraph& g : graphs) {
    const bool small = g.order() <= 14;
    CycleTable table;
    if (small) table = all_cycles(g);
    const int m = g.size();
    for (int k = 0; k < 25; ++k) {
      WeightMap w;
      for (VertexId v : g.vertices()) w.set(v, pick(rng));
      std::vector<Weight> best;
      if (small) best = pair_maxima(g, table, w);
      const double total = static_cast<double>(w.total(g));
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          const EdgeId e = g.edge_at(a).id, f = g.edge_at(b).id;
          ++s.instances;
          try {
            CycleResult r = long_cycle(g, w, e, f, opt);
            const bool adj = g.adjacent_edges(e, f);
            const double need = adj ? std::pow(total, kR) : constants().c * std::pow(total, kR);
            const bool ok = is_valid_cycle(g, r.cycle) && contains_edge(r.cycle, e) && contains_edge(r.cycle, f) &&
                            cycle_weight(g, w, r.cycle) == r.weight && r.weight + 1e-9 >= need;
            if (!ok) {
              ++s.bound_failures;
              if (s.first.empty()) s.first = "bound n=" + std::to_string(g.order());
            }
            if (small) {
              ++s.oracle_checked;
              if (!(r.bound <= r.weight + 1e-9 && r.weight <= best[a * m + b])) {
                ++s.sandwich_failures;
                if (s.first.empty()) s.first = "sandwich n=" + std::to_string(g.order());
              }
            }
          } catch (const Error& err) {
            ++s.errors;
            if (s.first.empty()) s.first = std::string(to_string(err.code())) + ": " + err.what();
          }
        }
    }
  }
  s.secs = seconds_since(t0);
  return s;
}

bool constants_check() {
  int n = 0, bad = 0;
  std::string worst;
  for (const NamedConstant& c : proof_constants_report()) {
    if (c.printed == 0) continue;
    ++n;
    if (!matches_printed(c.value, c.printed)) {
      ++bad;
      worst += " " + c.name;
    }
  }
  return report(3, "printed constants", bad == 0 && n >= 16,
                std::to_string(n) + " constants, " + std::to_string(bad) + " off" + worst);
}

bool exponent_check() {
  auto t0 = Clock::now();
  RootResult r = optimal_exponent(1e-15);
  const double secs = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "root %.9f residual %.2g in %.4f s", r.root, r.residual, secs);
  return report(4, "optimal exponent", r.root > 0.800008 && std::abs(r.residual) < 1e-12 && secs < 1.0, buf);
}

bool grid_check_all() {
  bool ok = true;
  std::string detail;
  for (int p = 1; p <= 6; ++p) {
    GridSummary s = grid_check(static_cast<Lemma4Part>(p), 50, 100000, 1);
    const bool enough = s.exhaustive || s.checked + s.vacuous >= 100000;
    ok = ok && s.failures == 0 && enough && s.checked > 0;
    detail += std::string(to_string(s.part)) + ":" + std::to_string(s.checked) + "/" + std::to_string(s.failures) + " ";
  }
  return report(5, "inequality grids", ok, detail + "(checked/failures)");
}

bool eulerian_check() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  int graphs = 0, bad = 0;
  std::string first;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const int n = 4 + 2 * static_cast<int>(s % 5);
    MultiGraph g = random_3_edge_connected(n, 1 + static_cast<int>(s % 3), s);
    ++graphs;
    WeightMap w;
    std::uniform_int_distribution<Weight> pick(0, 10);
    for (VertexId v : g.vertices()) w.set(v, pick(rng));
    const double total = static_cast<double>(w.total(g));
    std::uniform_int_distribution<int> edge(0, g.size() - 1);
    const EdgeId e = g.edge_at(edge(rng)).id;
    EdgeId f = e;
    while (f == e) f = g.edge_at(edge(rng)).id;
    for (bool two : {false, true}) {
      try {
        EulerianResult r = eulerian_subgraph(g, w, e, two ? std::optional<EdgeId>(f) : std::nullopt);
        const double need = two ? constants().c * std::pow(total, kR) : std::pow(total, kR);
        auto has = [&](EdgeId x) { return std::find(r.edges.begin(), r.edges.end(), x) != r.edges.end(); };
        const bool ok = r.lifted.graph.is_cubic() && is_3_connected(r.lifted.graph) &&
                        is_eulerian_edge_set(g, r.edges) && has(e) && (!two || has(f)) && r.weight + 1e-9 >= need;
        if (!ok) {
          ++bad;
          if (first.empty()) first = " first at seed " + std::to_string(s);
        }
      } catch (const Error& err) {
        ++bad;
        if (first.empty()) first = std::string(" ") + err.what();
      }
    }
  }
  const double secs = seconds_since(t0);
  return report(6, "eulerian corollary", bad == 0 && secs < 300,
                std::to_string(graphs) + " graphs, " + std::to_string(bad) + " bad, " + std::to_string(secs) + " s" + first);
}

}  // namespace

int main() {
  bool all = true;
  SweepResult s = sweep();
  all &= report(1, "bound satisfaction", s.bound_failures == 0 && s.errors == 0 && s.secs < 600,
                std::to_string(s.instances) + " instances, " + std::to_string(s.bound_failures + s.errors) +
                    " failures, " + std::to_string(s.secs) + " s " + s.first);
  all &= report(2, "oracle sandwich", s.sandwich_failures == 0 && s.errors == 0 && s.oracle_checked > 0,
                std::to_string(s.oracle_checked) + " checked, " + std::to_string(s.sandwich_failures) + " failures");
  all &= constants_check();
  all &= exponent_check();
  all &= grid_check_all();
  all &= eulerian_check();

  VerifyOptions opt;
  VerifyReport a = verify(opt);
  std::string missing;
  for (const std::string& m : a.missing) missing += " " + m;
  all &= report(7, "branch coverage", a.missing.empty() && a.failed == 0,
                std::to_string(a.histogram.size()) + " labels, missing:" + (missing.empty() ? " none" : missing));
  VerifyReport b = verify(opt);
  all &= report(8, "determinism", to_json(a).dump() == to_json(b).dump(),
                std::to_string(to_json(a).dump().size()) + " bytes compared");
  return all ? 0 : 1;
}
