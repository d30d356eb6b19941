#pragma once

#include <optional>
#include <vector>

#include "circum/bounds.hpp"
#include "circum/cycle.hpp"
#include "circum/graph.hpp"

namespace circum {

struct Expansion {
  VertexId original = kNoVertex;
  std::vector<VertexId> cycle;        // attachment vertices in cycle order
  std::vector<EdgeId> attached_edge;  // original edge at cycle[i]
  std::vector<EdgeId> cycle_edges;    // cycle_edges[i] joins cycle[i] and cycle[i+1]
  VertexId carrier = kNoVertex;       // holds w(original)
};

struct Expanded {
  MultiGraph graph;
  WeightMap weights;
  Expansion expansion;
};

// Replaces u (degree >= 4) by a cycle with one attachment vertex per edge end.
Expanded expand_vertex(const MultiGraph& g, const WeightMap& w, VertexId u);

struct Cubified {
  MultiGraph graph;
  WeightMap weights;
  std::vector<Expansion> expansions;
};

Cubified cubify(const MultiGraph& g, const WeightMap& w);

struct EulerianResult {
  Cubified lifted;
  EdgeId partner = kNoEdge;       // second edge used in the lifted graph
  Cycle cycle;                    // in lifted.graph
  std::vector<EdgeId> edges;      // H, sorted
  VertexSet vertices;             // V(H)
  Weight weight = 0;
  double bound = 0;
  BoundKind kind = BoundKind::Adjacent;
};

EulerianResult eulerian_subgraph(const MultiGraph& g, const WeightMap& w, EdgeId e,
                                 std::optional<EdgeId> f = {});

// Connected and every vertex of even degree.
bool is_eulerian_edge_set(const MultiGraph& g, const std::vector<EdgeId>& edges);

}  // namespace circum
