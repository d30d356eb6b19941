#include "circum/cuts.hpp"

#include <algorithm>
#include <set>

#include "circum/connectivity.hpp"

namespace circum {

CutSide make_cut_side(const MultiGraph& g, VertexSet side) {
  CutSide c;
  c.side = make_set(std::move(side));
  c.cut_edges = boundary(g, c.side);
  std::sort(c.cut_edges.begin(), c.cut_edges.end());
  return c;
}

namespace {

int across(const MultiGraph& g, int ei, int x) {
  return g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
}

// flow[ei] in {-1,0,1}: +1 means one unit from endpoint 0 to endpoint 1.
int residual(const MultiGraph& g, const std::vector<int>& flow, int ei, int from) {
  return g.endpoint_index(ei, 0) == from ? 1 - flow[ei] : 1 + flow[ei];
}

}  // namespace

MinCut min_edge_cut(const MultiGraph& g, std::span<const VertexId> s, std::span<const VertexId> t,
                    int cap) {
  const int n = g.order();
  std::vector<char> role(n, 0);  // 1 source, 2 sink
  for (VertexId v : s) {
    int i = g.vertex_index(v);
    if (i < 0) throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(v));
    role[i] = 1;
  }
  for (VertexId v : t) {
    int i = g.vertex_index(v);
    if (i < 0) throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(v));
    if (role[i] == 1) throw Error(ErrorCode::InvalidGraph, "source and sink overlap");
    role[i] = 2;
  }
  std::vector<int> flow(g.size(), 0);
  std::vector<int> via(n);
  std::vector<int> queue;
  int value = 0;
  auto search = [&](bool stop_at_sink) {
    std::fill(via.begin(), via.end(), -2);
    queue.clear();
    for (int i = 0; i < n; ++i)
      if (role[i] == 1) {
        via[i] = -1;
        queue.push_back(i);
      }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (int ei : g.incident_indices(x)) {
        int y = across(g, ei, x);
        if (via[y] != -2 || residual(g, flow, ei, x) <= 0) continue;
        via[y] = ei;
        if (stop_at_sink && role[y] == 2) return y;
        queue.push_back(y);
      }
    }
    return -1;
  };
  while (value < cap) {
    int y = search(true);
    if (y < 0) break;
    while (via[y] >= 0) {
      int ei = via[y];
      int x = across(g, ei, y);
      flow[ei] += g.endpoint_index(ei, 0) == x ? 1 : -1;
      y = x;
    }
    ++value;
  }
  search(false);
  VertexSet side;
  for (int i = 0; i < n; ++i)
    if (via[i] == -2) side.push_back(g.vertex_at(i));
  MinCut out;
  out.value = value;
  out.sink_side = make_cut_side(g, std::move(side));
  return out;
}

CutSide maximal_3cut_side(const MultiGraph& g, EdgeId eid, std::span<const VertexId> forbidden) {
  const Edge& e = g.edge(eid);
  VertexSet forb = make_set(std::vector<VertexId>(forbidden.begin(), forbidden.end()));
  bool fu = set_contains(forb, e.u);
  bool fv = set_contains(forb, e.v);
  if (fu == fv) throw Error(ErrorCode::PreconditionViolated, "edge must have exactly one forbidden end");
  VertexId y = fu ? e.v : e.u;
  VertexId t[] = {y};
  MinCut mc = min_edge_cut(g, forb, t, 4);
  if (mc.value != 3)
    throw Error(ErrorCode::NoQualifyingSide,
                "edge " + std::to_string(eid) + " has cut value " + std::to_string(mc.value));
  if (!std::binary_search(mc.sink_side.cut_edges.begin(), mc.sink_side.cut_edges.end(), eid))
    throw Error(ErrorCode::NoQualifyingSide, "edge " + std::to_string(eid) + " not on maximal side boundary");
  return mc.sink_side;
}

CutSide submodular_union(const MultiGraph& g, const CutSide& a, const CutSide& b) {
  if (a.cut_edges.size() != 3 || b.cut_edges.size() != 3)
    throw Error(ErrorCode::PreconditionViolated, "sides must have three boundary edges");
  if (!sets_intersect(a.side, b.side))
    throw Error(ErrorCode::PreconditionViolated, "sides must meet");
  VertexSet u = set_union(a.side, b.side);
  if (static_cast<int>(u.size()) == g.order())
    throw Error(ErrorCode::PreconditionViolated, "union must not be everything");
  CutSide out = make_cut_side(g, std::move(u));
  if (out.cut_edges.size() != 3)
    throw Error(ErrorCode::PreconditionViolated,
                "union boundary is " + std::to_string(out.cut_edges.size()));
  return out;
}

std::optional<CutSide> find_2_edge_cut_separating(const MultiGraph& g, EdgeId eid, EdgeId fid) {
  if (eid == fid) throw Error(ErrorCode::SameEdge, "edge " + std::to_string(eid));
  const Edge& e = g.edge(eid);
  const Edge& f = g.edge(fid);
  if (e.touches(f.u) || e.touches(f.v)) return std::nullopt;
  VertexId s[] = {e.u, e.v};
  VertexId t[] = {f.u, f.v};
  MinCut mc = min_edge_cut(g, s, t, 3);
  if (mc.value > 2) return std::nullopt;
  return make_cut_side(g, set_minus(VertexSet(g.vertices().begin(), g.vertices().end()), mc.sink_side.side));
}

namespace {

CutSide chosen_side(const MultiGraph& g, VertexSet a) {
  VertexSet all(g.vertices().begin(), g.vertices().end());
  VertexSet b = set_minus(all, a);
  bool pick_a;
  if (a.size() != b.size()) pick_a = a.size() < b.size();
  else pick_a = !set_contains(a, all.front());
  return make_cut_side(g, pick_a ? std::move(a) : std::move(b));
}

}  // namespace

std::optional<CutSide> find_2_edge_cut(const MultiGraph& g) {
  for (const Edge& e : g.edges()) {
    EdgeId rem[] = {e.id};
    std::vector<EdgeId> br = bridges(g, rem);
    if (!br.empty()) {
      EdgeId both[] = {e.id, br.front()};
      return chosen_side(g, component(g, g.edge(br.front()).u, both));
    }
  }
  return std::nullopt;
}

std::vector<CutSide> enumerate_3_edge_cuts(const MultiGraph& g, std::optional<EdgeId> containing) {
  std::set<std::vector<EdgeId>> seen;
  std::vector<CutSide> out;
  const auto edges = g.edges();
  auto consider = [&](EdgeId a, EdgeId b) {
    EdgeId rem[] = {a, b};
    for (EdgeId c : bridges(g, rem)) {
      std::vector<EdgeId> key{a, b, c};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      EdgeId all3[] = {a, b, c};
      out.push_back(chosen_side(g, component(g, g.edge(c).u, all3)));
    }
  };
  if (containing) {
    g.edge(*containing);
    for (const Edge& h : edges)
      if (h.id != *containing) consider(*containing, h.id);
  } else {
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) consider(edges[i].id, edges[j].id);
  }
  std::sort(out.begin(), out.end(),
            [](const CutSide& x, const CutSide& y) { return x.cut_edges < y.cut_edges; });
  return out;
}

bool is_trivial(const MultiGraph& g, const CutSide& c) {
  return c.side.size() <= 1 || static_cast<int>(c.side.size()) >= g.order() - 1;
}

}  // namespace circum
