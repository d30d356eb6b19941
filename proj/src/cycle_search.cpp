#include <algorithm>
#include <array>
#include <string>

#include "circum/connectivity.hpp"
#include "circum/cycle.hpp"

namespace circum {

std::vector<VertexId> cycle_vertices(const MultiGraph& g, const Cycle& c) {
  const std::size_t k = c.edges.size();
  if (k < 2) throw Error(ErrorCode::InvalidGraph, "a cycle needs at least two edges");
  for (EdgeId id : c.edges)
    if (!g.has_edge(id)) throw Error(ErrorCode::ForeignEdge, "cycle edge " + std::to_string(id));
  const Edge& first = g.edge(c.edges[0]);
  const Edge& last = g.edge(c.edges[k - 1]);
  // Start vertex: the end of the first edge shared with the last edge; for a
  // 2-cycle either works, so take u.
  VertexId start = first.u;
  if (k > 2 && !last.touches(first.u)) start = first.v;
  std::vector<VertexId> vs;
  vs.reserve(k);
  VertexId at = start;
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = g.edge(c.edges[i]);
    if (!e.touches(at)) throw Error(ErrorCode::InvalidGraph, "cycle edges are not consecutive");
    vs.push_back(at);
    at = e.other(at);
  }
  if (at != start) throw Error(ErrorCode::InvalidGraph, "cycle does not close");
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidGraph, "cycle repeats a vertex");
  std::vector<EdgeId> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw Error(ErrorCode::InvalidGraph, "cycle repeats an edge");
  return vs;
}

bool is_valid_cycle(const MultiGraph& g, const Cycle& c) {
  try {
    cycle_vertices(g, c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Weight cycle_weight(const MultiGraph& g, const WeightMap& w, const Cycle& c) {
  return w.total(cycle_vertices(g, c));
}

bool contains_edge(const Cycle& c, EdgeId e) {
  return std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  if (a.edges.size() != b.edges.size()) return false;
  std::vector<EdgeId> x = a.edges, y = b.edges;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

struct ThroughSearch {
  const MultiGraph& g;
  std::vector<char> required;   // by edge index
  std::vector<char> used;       // by edge index
  std::vector<char> visited;    // by vertex index
  std::vector<int> path;        // edge indices
  std::vector<int> req_list;
  int remaining = 0;
  int start = 0;

  int across(int ei, int x) const {
    return g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
  }

  bool feasible(int x) const {
    for (int r : req_list) {
      if (used[r]) continue;
      for (int side = 0; side < 2; ++side) {
        int a = g.endpoint_index(r, side);
        if (visited[a] && a != x && a != start) return false;
      }
    }
    // start must stay reachable from x through unvisited vertices
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int ei : g.incident_indices(y)) {
        if (used[ei]) continue;
        int z = across(ei, y);
        if (z == start) return true;
        if (visited[z] || seen[z]) continue;
        seen[z] = 1;
        stack.push_back(z);
      }
    }
    return false;
  }

  bool dfs(int x) {
    if (!feasible(x)) return false;
    auto inc = g.incident_indices(x);
    int order[8];
    int cnt = 0;
    for (int ei : inc)
      if (!used[ei] && required[ei]) order[cnt++] = ei;
    for (int ei : inc)
      if (!used[ei] && !required[ei]) order[cnt++] = ei;
    for (int k = 0; k < cnt && k < 8; ++k) {
      int ei = order[k];
      int y = across(ei, x);
      int need = remaining - (required[ei] ? 1 : 0);
      if (y == start) {
        if (need == 0) {
          path.push_back(ei);
          return true;
        }
        continue;
      }
      if (visited[y]) continue;
      used[ei] = 1;
      visited[y] = 1;
      path.push_back(ei);
      remaining = need;
      if (dfs(y)) return true;
      remaining += required[ei] ? 1 : 0;
      path.pop_back();
      visited[y] = 0;
      used[ei] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Cycle> find_cycle_through(const MultiGraph& g, std::span<const EdgeId> req) {
  if (req.empty()) throw Error(ErrorCode::InvalidGraph, "no required edge");
  for (int x = 0; x < g.order(); ++x)
    if (g.incident_indices(x).size() > 8)
      throw Error(ErrorCode::InvalidGraph, "cycle search expects maximum degree 8");
  ThroughSearch s{g, {}, {}, {}, {}, {}};
  s.required.assign(g.size(), 0);
  s.used.assign(g.size(), 0);
  s.visited.assign(g.order(), 0);
  for (EdgeId id : req) {
    int i = g.edge_index(id);
    if (i < 0) throw Error(ErrorCode::ForeignEdge, "edge " + std::to_string(id));
    if (!s.required[i]) {
      s.required[i] = 1;
      s.req_list.push_back(i);
    }
  }
  int r0 = s.req_list.front();
  s.start = g.endpoint_index(r0, 0);
  int t = g.endpoint_index(r0, 1);
  s.used[r0] = 1;
  s.visited[s.start] = 1;
  s.visited[t] = 1;
  s.path.push_back(r0);
  s.remaining = static_cast<int>(s.req_list.size()) - 1;
  if (!s.dfs(t)) return std::nullopt;
  Cycle c;
  for (int ei : s.path) c.edges.push_back(g.edge_at(ei).id);
  return c;
}

Cycle cycle_through_two_edges(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw Error(ErrorCode::SameEdge, "edge " + std::to_string(e));
  g.edge(e);
  g.edge(f);
  if (!edge_connectivity_at_least(g, 2)) throw Error(ErrorCode::NotTwoConnected, "graph has a bridge");
  EdgeId req[] = {e, f};
  auto c = find_cycle_through(g, req);
  if (!c) throw Error(ErrorCode::NotTwoConnected, "no cycle through the two edges");
  return *c;
}

std::optional<Cycle> cycle_through_three_edges(const MultiGraph& g, EdgeId a, EdgeId b, EdgeId c) {
  if (a == b || a == c || b == c) throw Error(ErrorCode::SameEdge, "edges must be distinct");
  g.edge(a);
  g.edge(b);
  g.edge(c);
  if (!is_3_connected(g)) throw Error(ErrorCode::NotThreeConnected, "graph is not 3-connected");
  EdgeId req[] = {a, b, c};
  VertexSet comp = component(g, g.vertices().front(), req);
  if (static_cast<int>(comp.size()) != g.order()) return std::nullopt;
  auto cyc = find_cycle_through(g, req);
  if (!cyc) throw Error(ErrorCode::InternalError, "no cycle through three non-cut edges");
  return cyc;
}

Lemma3Result lemma3_cycle(const MultiGraph& g, VertexId u, EdgeId e, EdgeId keep) {
  if (!g.edge(keep).touches(u)) throw Error(ErrorCode::PreconditionViolated, "keep edge not at u");
  std::vector<EdgeId> at_u;
  for (EdgeId id : g.incident(u))
    if (id != keep) at_u.push_back(id);
  if (at_u.size() != 2) throw Error(ErrorCode::PreconditionViolated, "u is not cubic");
  std::sort(at_u.begin(), at_u.end());
  return lemma3_cycle(g, u, e, std::array<EdgeId, 3>{at_u[0], at_u[1], keep});
}

Lemma3Result lemma3_cycle(const MultiGraph& g, VertexId u, EdgeId e, std::array<EdgeId, 3> labels) {
  if (g.edge(e).touches(u)) throw Error(ErrorCode::PreconditionViolated, "u lies on e");
  std::vector<EdgeId> inc(g.incident(u).begin(), g.incident(u).end());
  std::vector<EdgeId> lab(labels.begin(), labels.end());
  std::sort(inc.begin(), inc.end());
  std::sort(lab.begin(), lab.end());
  if (inc != lab) throw Error(ErrorCode::PreconditionViolated, "labels are not the edges at u");
  const EdgeId at_u[2] = {labels[0], labels[1]};
  for (int k = 1; k <= 2; ++k) {
    EdgeId uvk = at_u[k - 1];
    VertexId vk = g.edge(uvk).other(u);
    std::pair<MultiGraph, Provenance> h;
    try {
      h = suppress_edge(g, uvk);
    } catch (const Error&) {
      continue;
    }
    if (!is_3_connected(h.first)) continue;
    EdgeId img_e = e, through_u = kNoEdge, through_vk = kNoEdge;
    for (const PathMap& pm : h.second.edge_map) {
      if (std::find(pm.edges.begin(), pm.edges.end(), e) != pm.edges.end()) img_e = pm.derived;
      if (std::find(pm.via.begin(), pm.via.end(), u) != pm.via.end()) through_u = pm.derived;
      if (std::find(pm.via.begin(), pm.via.end(), vk) != pm.via.end()) through_vk = pm.derived;
    }
    EdgeId req[] = {img_e, through_u, through_vk};
    auto c = find_cycle_through(h.first, req);
    if (!c) continue;
    Lemma3Result r;
    r.k = k;
    r.suppressed = uvk;
    r.graph = std::move(h.first);
    r.provenance = std::move(h.second);
    r.cycle = std::move(*c);
    return r;
  }
  throw Error(ErrorCode::HypothesisViolated, "neither suppression admits the cycle");
}

}  // namespace circum
