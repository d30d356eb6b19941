#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "circum/derivation.hpp"
#include "circum/graph.hpp"

namespace circum {

// Edges in cyclic order. A 2-cycle is a pair of parallel edges.
struct Cycle {
  std::vector<EdgeId> edges;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Vertex sequence: vertex i is the start of edge i. Throws InvalidGraph if
// the edges do not form a cycle of g.
std::vector<VertexId> cycle_vertices(const MultiGraph& g, const Cycle& c);
bool is_valid_cycle(const MultiGraph& g, const Cycle& c);
Weight cycle_weight(const MultiGraph& g, const WeightMap& w, const Cycle& c);
bool contains_edge(const Cycle& c, EdgeId e);
// Same cycle up to rotation and direction.
bool same_cycle(const Cycle& a, const Cycle& b);

// Exhaustive search for a cycle through every edge in `required`.
std::optional<Cycle> find_cycle_through(const MultiGraph& g, std::span<const EdgeId> required);

// For 2-connected g such a cycle always exists.
Cycle cycle_through_two_edges(const MultiGraph& g, EdgeId e, EdgeId f);
// Absent exactly when the three edges form an edge cut (for 3-connected g).
std::optional<Cycle> cycle_through_three_edges(const MultiGraph& g, EdgeId a, EdgeId b, EdgeId c);

struct Lemma3Result {
  int k = 0;                 // 1 or 2
  EdgeId suppressed = kNoEdge;
  MultiGraph graph;          // g with uv_k suppressed
  Provenance provenance;
  Cycle cycle;               // cycle in `graph`
};

// u has incident edges uv1, uv2 (the two that are not `keep`, by id) and
// uv3 = keep; e is not incident with u. Finds k in {1,2} so that g with uv_k
// suppressed is 3-connected and has a cycle through the image of e, the
// merged edge through u and the merged edge through v_k.
Lemma3Result lemma3_cycle(const MultiGraph& g, VertexId u, EdgeId e, EdgeId keep);
// Explicit labels {uv1, uv2, uv3}.
Lemma3Result lemma3_cycle(const MultiGraph& g, VertexId u, EdgeId e, std::array<EdgeId, 3> labels);

}  // namespace circum
