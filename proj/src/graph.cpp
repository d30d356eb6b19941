#include "circum/graph.hpp"

#include <algorithm>

namespace circum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DisconnectedPiece: return "DisconnectedPiece";
    case ErrorCode::OverlappingPieces: return "OverlappingPieces";
    case ErrorCode::ParallelRemainder: return "ParallelRemainder";
    case ErrorCode::LoopWouldForm: return "LoopWouldForm";
    case ErrorCode::SameEdge: return "SameEdge";
    case ErrorCode::ForeignEdge: return "ForeignEdge";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalBoundMiss: return "InternalBoundMiss";
    case ErrorCode::NoQualifyingSide: return "NoQualifyingSide";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnliftableEdge: return "UnliftableEdge";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "?";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                       VertexId next_vertex, EdgeId next_edge)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error(ErrorCode::InvalidGraph, "duplicate vertex id");
  if (!vertices_.empty() && vertices_.front() < 0)
    throw Error(ErrorCode::InvalidGraph, "negative vertex id");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].id == edges_[i - 1].id)
      throw Error(ErrorCode::InvalidGraph, "duplicate edge id " + std::to_string(edges_[i].id));
  if (!edges_.empty() && edges_.front().id < 0)
    throw Error(ErrorCode::InvalidGraph, "negative edge id");

  const int n = order();
  const int m = size();
  eu_.resize(m);
  ev_.resize(m);
  inc_off_.assign(n + 1, 0);
  for (int i = 0; i < m; ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "loop at edge " + std::to_string(e.id));
    eu_[i] = vertex_index(e.u);
    ev_[i] = vertex_index(e.v);
    if (eu_[i] < 0 || ev_[i] < 0)
      throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e.id) + " has unknown endpoint");
    ++inc_off_[eu_[i] + 1];
    ++inc_off_[ev_[i] + 1];
  }
  for (int i = 0; i < n; ++i) inc_off_[i + 1] += inc_off_[i];
  inc_ids_.resize(2 * m);
  inc_idx_.resize(2 * m);
  std::vector<int> fill(inc_off_.begin(), inc_off_.end() - 1);
  for (int i = 0; i < m; ++i) {
    for (int x : {eu_[i], ev_[i]}) {
      inc_ids_[fill[x]] = edges_[i].id;
      inc_idx_[fill[x]] = i;
      ++fill[x];
    }
  }

  VertexId vmax = vertices_.empty() ? 0 : vertices_.back() + 1;
  EdgeId emax = edges_.empty() ? 0 : edges_.back().id + 1;
  next_vertex_ = std::max(vmax, next_vertex);
  next_edge_ = std::max(emax, next_edge);
}

int MultiGraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int MultiGraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const Edge& MultiGraph::edge(EdgeId e) const {
  int i = edge_index(e);
  if (i < 0) throw Error(ErrorCode::ForeignEdge, "no edge " + std::to_string(e));
  return edges_[i];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  int i = vertex_index(v);
  if (i < 0) throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(v));
  return {inc_ids_.data() + inc_off_[i], inc_ids_.data() + inc_off_[i + 1]};
}

bool MultiGraph::is_cubic() const {
  for (int i = 0; i < order(); ++i)
    if (inc_off_[i + 1] - inc_off_[i] != 3) return false;
  return true;
}

bool MultiGraph::adjacent_edges(EdgeId a, EdgeId b) const {
  const Edge& x = edge(a);
  const Edge& y = edge(b);
  return x.touches(y.u) || x.touches(y.v);
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (EdgeId id : incident(a))
    if (edge(id).other(a) == b) out.push_back(id);
  return out;
}

void WeightMap::set(VertexId v, Weight value) {
  if (v < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex id");
  if (value < 0) throw Error(ErrorCode::InvalidGraph, "negative weight");
  if (static_cast<std::size_t>(v) >= w_.size()) {
    if (value == 0) return;
    w_.resize(v + 1, 0);
  }
  w_[v] = value;
}

Weight WeightMap::total(const MultiGraph& g) const { return total(g.vertices()); }

Weight WeightMap::total(std::span<const VertexId> vs) const {
  Weight s = 0;
  for (VertexId v : vs) s += (*this)[v];
  return s;
}

WeightMap WeightMap::uniform(const MultiGraph& g, Weight value) {
  WeightMap w;
  for (VertexId v : g.vertices()) w.set(v, value);
  return w;
}

VertexSet make_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<EdgeId> boundary(const MultiGraph& g, std::span<const VertexId> x) {
  std::vector<char> in(g.order(), 0);
  for (VertexId v : x) {
    int i = g.vertex_index(v);
    if (i >= 0) in[i] = 1;
  }
  std::vector<EdgeId> out;
  for (int i = 0; i < g.size(); ++i)
    if (in[g.endpoint_index(i, 0)] != in[g.endpoint_index(i, 1)]) out.push_back(g.edge_at(i).id);
  return out;
}

}  // namespace circum
