#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circum {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Sorted, duplicate free.
using VertexSet = std::vector<VertexId>;

enum class ErrorCode {
  InvalidGraph,
  ParseError,
  DisconnectedPiece,
  OverlappingPieces,
  ParallelRemainder,
  LoopWouldForm,
  SameEdge,
  ForeignEdge,
  NotTwoConnected,
  NotThreeConnected,
  HypothesisViolated,
  PreconditionViolated,
  InternalBoundMiss,
  NoQualifyingSide,
  OddOrder,
  DegreeTooSmall,
  BudgetExceeded,
  UnliftableEdge,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  EdgeId id = kNoEdge;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable loopless multigraph. Every operation that changes structure
// builds a new graph; fresh ids continue from the parent's counters so ids
// are never reused along a chain of derived graphs.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             VertexId next_vertex = kNoVertex, EdgeId next_edge = kNoEdge);

  int order() const { return static_cast<int>(vertices_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vertex_index(v) >= 0; }
  bool has_edge(EdgeId e) const { return edge_index(e) >= 0; }

  const Edge& edge(EdgeId e) const;
  std::span<const EdgeId> incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  bool is_cubic() const;
  bool adjacent_edges(EdgeId a, EdgeId b) const;
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;

  // Dense indices follow the sorted id order.
  int vertex_index(VertexId v) const;
  int edge_index(EdgeId e) const;
  VertexId vertex_at(int i) const { return vertices_[i]; }
  const Edge& edge_at(int i) const { return edges_[i]; }
  int endpoint_index(int edge_idx, int side) const {
    return side == 0 ? eu_[edge_idx] : ev_[edge_idx];
  }
  std::span<const int> incident_indices(int vi) const {
    return {inc_idx_.data() + inc_off_[vi], inc_idx_.data() + inc_off_[vi + 1]};
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> eu_, ev_;
  std::vector<int> inc_off_;
  std::vector<EdgeId> inc_ids_;
  std::vector<int> inc_idx_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

// Vertex weights, absent entries read as zero.
class WeightMap {
 public:
  WeightMap() = default;

  Weight operator[](VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < w_.size() ? w_[v] : 0;
  }
  void set(VertexId v, Weight value);
  Weight total(const MultiGraph& g) const;
  Weight total(std::span<const VertexId> vs) const;

  static WeightMap uniform(const MultiGraph& g, Weight value);

 private:
  std::vector<Weight> w_;
};

VertexSet make_set(std::vector<VertexId> vs);
bool set_contains(const VertexSet& s, VertexId v);
bool sets_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);

// Edges with exactly one end in X.
std::vector<EdgeId> boundary(const MultiGraph& g, std::span<const VertexId> x);

}  // namespace circum
