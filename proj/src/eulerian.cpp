#include "circum/eulerian.hpp"

#include <algorithm>
#include <map>

#include "circum/connectivity.hpp"
#include "circum/long_cycle.hpp"

namespace circum {

Expanded expand_vertex(const MultiGraph& g, const WeightMap& w, VertexId u) {
  if (!g.has_vertex(u)) throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(u));
  if (g.degree(u) < 4) throw Error(ErrorCode::DegreeTooSmall, "vertex " + std::to_string(u) + " has degree below 4");
  std::vector<EdgeId> at_u(g.incident(u).begin(), g.incident(u).end());
  std::sort(at_u.begin(), at_u.end());

  std::vector<VertexId> rest;
  for (VertexId x : g.vertices())
    if (x != u) rest.push_back(x);
  // components of G - u, labelled by smallest vertex
  std::map<VertexId, VertexId> comp_of;
  {
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
      if (!e.touches(u)) es.push_back(e);
    MultiGraph h(rest, es);
    for (VertexId x : rest) {
      if (comp_of.count(x)) continue;
      for (VertexId y : component(h, x)) comp_of[y] = x;
    }
  }

  // natural order: components by smallest vertex, edges by id inside
  std::vector<std::pair<VertexId, EdgeId>> slots;
  for (EdgeId id : at_u) slots.push_back({comp_of.at(g.edge(id).other(u)), id});
  std::stable_sort(slots.begin(), slots.end(), [](auto a, auto b) { return a.first < b.first; });
  std::vector<EdgeId> order;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [first, last] per component
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i == 0 || slots[i].first != slots[i - 1].first) ranges.push_back({i, i});
    ranges.back().second = i;
    order.push_back(slots[i].second);
  }
  const EdgeId first_edge = order.front();
  if (ranges.size() > 1) {
    const std::size_t k = ranges.size();
    std::vector<EdgeId> named = order;
    for (std::size_t s = 0; s < k; ++s) {
      EdgeId a = named[ranges[s].second];
      EdgeId b = named[ranges[(s + 1) % k].first];
      auto pa = std::find(order.begin(), order.end(), a);
      auto pb = std::find(order.begin(), order.end(), b);
      std::iter_swap(pa, pb);
    }
  }

  Expanded out;
  Expansion& x = out.expansion;
  x.original = u;
  VertexId next_v = g.next_vertex_id();
  EdgeId next_e = g.next_edge_id();
  std::map<EdgeId, VertexId> attach;
  for (EdgeId id : order) {
    VertexId v = next_v++;
    attach[id] = v;
    x.cycle.push_back(v);
    x.attached_edge.push_back(id);
    rest.push_back(v);
  }
  x.carrier = attach.at(first_edge);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.touches(u)) es.push_back({e.id, attach.at(e.id), e.other(u)});
    else es.push_back(e);
  }
  for (std::size_t i = 0; i < x.cycle.size(); ++i) {
    EdgeId id = next_e++;
    es.push_back({id, x.cycle[i], x.cycle[(i + 1) % x.cycle.size()]});
    x.cycle_edges.push_back(id);
  }
  std::sort(rest.begin(), rest.end());
  out.graph = MultiGraph(std::move(rest), std::move(es), next_v, next_e);
  out.weights = w;
  out.weights.set(u, 0);
  for (VertexId v : x.cycle) out.weights.set(v, v == x.carrier ? w[u] : 0);
  return out;
}

Cubified cubify(const MultiGraph& g, const WeightMap& w) {
  std::vector<VertexId> todo;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= 4) todo.push_back(v);
  std::stable_sort(todo.begin(), todo.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  Cubified c{g, w, {}};
  for (VertexId u : todo) {
    Expanded x = expand_vertex(c.graph, c.weights, u);
    c.graph = std::move(x.graph);
    c.weights = std::move(x.weights);
    c.expansions.push_back(std::move(x.expansion));
  }
  if (!c.graph.is_cubic()) throw Error(ErrorCode::InternalError, "lifted graph is not cubic");
  if (!is_3_connected(c.graph)) throw Error(ErrorCode::InternalError, "lifted graph is not 3-connected");
  if (c.weights.total(c.graph) != w.total(g)) throw Error(ErrorCode::InternalError, "lifting changed the weight");
  return c;
}

bool is_eulerian_edge_set(const MultiGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return false;
  std::map<VertexId, int> deg;
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    for (VertexId x : {e.u, e.v})
      if (!parent.count(x)) parent[x] = x;
    ++deg[e.u];
    ++deg[e.v];
    parent[find(e.u)] = find(e.v);
  }
  const VertexId root = find(parent.begin()->first);
  for (auto& [v, d] : deg)
    if (d % 2 != 0 || find(v) != root) return false;
  return true;
}

EulerianResult eulerian_subgraph(const MultiGraph& g, const WeightMap& w, EdgeId e, std::optional<EdgeId> f) {
  g.edge(e);
  if (f) {
    g.edge(*f);
    if (*f == e) throw Error(ErrorCode::SameEdge, "e and f coincide");
  }
  if (!is_connected(g) || !edge_connectivity_at_least(g, 3))
    throw Error(ErrorCode::PreconditionViolated, "graph is not 3-edge-connected");
  EulerianResult r;
  r.lifted = cubify(g, w);
  const MultiGraph& L = r.lifted.graph;
  if (f) {
    r.partner = *f;
  } else {
    const Edge& el = L.edge(e);
    VertexId x = std::min(el.u, el.v);
    EdgeId best = kNoEdge;
    for (EdgeId id : L.incident(x))
      if (id != e && (best == kNoEdge || id < best)) best = id;
    r.partner = best;
  }
  LongCycleOptions opt;
  opt.record_trace = false;
  CycleResult cr = long_cycle(L, r.lifted.weights, e, r.partner, opt);
  r.cycle = cr.cycle;
  for (EdgeId id : cr.cycle.edges)
    if (g.has_edge(id)) r.edges.push_back(id);
  std::sort(r.edges.begin(), r.edges.end());
  for (EdgeId id : r.edges) {
    r.vertices.push_back(g.edge(id).u);
    r.vertices.push_back(g.edge(id).v);
  }
  r.vertices = make_set(r.vertices);
  r.weight = w.total(r.vertices);
  r.kind = f ? BoundKind::Nonadjacent : BoundKind::Adjacent;
  r.bound = bound(r.kind, w.total(g));
  if (!is_eulerian_edge_set(g, r.edges)) throw Error(ErrorCode::InternalError, "H is not Eulerian");
  if (!meets(r.weight, r.bound)) throw Error(ErrorCode::InternalBoundMiss, "Eulerian subgraph below the bound");
  return r;
}

}  // namespace circum
