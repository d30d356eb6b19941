#pragma once

#include <span>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

bool is_connected(const MultiGraph& g);
// Bridges of g with the listed edges removed.
std::vector<EdgeId> bridges(const MultiGraph& g, std::span<const EdgeId> removed = {});
// Component of `start` in g minus `removed`.
VertexSet component(const MultiGraph& g, VertexId start, std::span<const EdgeId> removed = {});
bool edge_connectivity_at_least(const MultiGraph& g, int k);
bool has_parallel_edges(const MultiGraph& g);
// Cubic graphs: 3-edge-connected and simple with at least four vertices, or
// the theta graph.
bool is_3_connected(const MultiGraph& g);
bool is_theta(const MultiGraph& g);

}  // namespace circum
