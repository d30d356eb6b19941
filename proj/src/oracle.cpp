#include "circum/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace circum {

namespace {

struct Search {
  const MultiGraph& g;
  std::vector<Weight> wv;       // by vertex index
  int start = 0;
  int need = -1;                // edge index that must be used, or -1
  int min_vertex = 0;           // unconstrained mode: only vertices >= this index
  std::vector<char> on;         // vertex on path
  std::vector<char> used;       // edge on path
  std::vector<int> path;
  Weight cur = 0;
  Weight rest = 0;              // weight of vertices not on the path
  Weight best = -1;
  std::vector<int> best_path;
  std::int64_t budget_ms = 0;
  std::int64_t steps = 0;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void tick() {
    if (budget_ms <= 0 || (++steps & 4095) != 0) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (ms > budget_ms) throw Error(ErrorCode::BudgetExceeded, "oracle budget exceeded");
  }

  int across(int ei, int x) const {
    return g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
  }

  void dfs(int x) {
    tick();
    if (cur + rest <= best) return;
    for (int ei : g.incident_indices(x)) {
      if (used[ei]) continue;
      int y = across(ei, x);
      if (y < min_vertex) continue;
      if (y == start) {
        if (path.empty()) continue;
        bool has_need = need < 0 || need == ei || used[need];
        if (has_need && cur > best) {
          best = cur;
          best_path = path;
          best_path.push_back(ei);
        }
        continue;
      }
      if (on[y]) continue;
      on[y] = 1;
      used[ei] = 1;
      path.push_back(ei);
      cur += wv[y];
      rest -= wv[y];
      dfs(y);
      rest += wv[y];
      cur -= wv[y];
      path.pop_back();
      used[ei] = 0;
      on[y] = 0;
    }
  }
};

}  // namespace

OracleResult oracle_max_cycle(const MultiGraph& g, const WeightMap& w, std::optional<EdgeId> e,
                              std::optional<EdgeId> f, std::int64_t budget_ms) {
  if (f && !e) throw Error(ErrorCode::InvalidGraph, "f given without e");
  if (e && f && *e == *f) throw Error(ErrorCode::SameEdge, "e and f coincide");
  Search s{g, {}, 0, -1, 0, {}, {}, {}, 0, 0, -1, {}, budget_ms, 0, std::chrono::steady_clock::now()};
  s.wv.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.wv[i] = w[g.vertex_at(i)];
  s.on.assign(g.order(), 0);
  s.used.assign(g.size(), 0);
  Weight all = 0;
  for (Weight x : s.wv) all += x;
  if (e) {
    int ei = g.edge_index(*e);
    if (ei < 0) throw Error(ErrorCode::ForeignEdge, "edge " + std::to_string(*e));
    if (f) {
      s.need = g.edge_index(*f);
      if (s.need < 0) throw Error(ErrorCode::ForeignEdge, "edge " + std::to_string(*f));
    }
    s.start = g.endpoint_index(ei, 0);
    int t = g.endpoint_index(ei, 1);
    s.on[s.start] = s.on[t] = 1;
    s.used[ei] = 1;
    s.path = {ei};
    s.cur = s.wv[s.start] + s.wv[t];
    s.rest = all - s.cur;
    s.dfs(t);
  } else {
    for (int v = 0; v < g.order(); ++v) {
      s.start = v;
      s.min_vertex = v;
      s.on[v] = 1;
      s.cur = s.wv[v];
      s.rest = 0;
      for (int u = v + 1; u < g.order(); ++u) s.rest += s.wv[u];
      s.dfs(v);
      s.on[v] = 0;
    }
  }
  OracleResult r;
  if (s.best < 0) return r;
  r.found = true;
  r.weight = s.best;
  for (int ei : s.best_path) r.cycle.edges.push_back(g.edge_at(ei).id);
  return r;
}

CycleTable all_cycles(const MultiGraph& g) {
  CycleTable t;
  const int n = g.order();
  std::vector<char> on(n, 0), used(g.size(), 0);
  std::vector<int> path, verts;
  int start = 0;
  auto across = [&](int ei, int x) {
    return g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
  };
  // Each cycle is found twice (two directions) from its smallest vertex;
  // keep the direction whose first edge index is below the last.
  auto dfs = [&](auto&& self, int x) -> void {
    for (int ei : g.incident_indices(x)) {
      if (used[ei]) continue;
      int y = across(ei, x);
      if (y < start) continue;
      if (y == start) {
        if (path.empty()) continue;
        if (path.front() < ei) {
          std::vector<int> c = path;
          c.push_back(ei);
          t.edges.push_back(std::move(c));
          t.vertices.push_back(verts);
        }
        continue;
      }
      if (on[y]) continue;
      on[y] = 1;
      used[ei] = 1;
      path.push_back(ei);
      verts.push_back(y);
      self(self, y);
      verts.pop_back();
      path.pop_back();
      used[ei] = 0;
      on[y] = 0;
    }
  };
  for (int v = 0; v < n; ++v) {
    start = v;
    on[v] = 1;
    verts = {v};
    dfs(dfs, v);
    on[v] = 0;
  }
  return t;
}

std::vector<Weight> pair_maxima(const MultiGraph& g, const CycleTable& t, const WeightMap& w) {
  const int m = g.size();
  std::vector<Weight> best(static_cast<std::size_t>(m) * m, -1);
  std::vector<Weight> wv(g.order());
  for (int i = 0; i < g.order(); ++i) wv[i] = w[g.vertex_at(i)];
  for (std::size_t c = 0; c < t.edges.size(); ++c) {
    Weight total = 0;
    for (int v : t.vertices[c]) total += wv[v];
    const auto& es = t.edges[c];
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = 0; b < es.size(); ++b) {
        Weight& slot = best[static_cast<std::size_t>(es[a]) * m + es[b]];
        slot = std::max(slot, total);
      }
  }
  return best;
}

}  // namespace circum
