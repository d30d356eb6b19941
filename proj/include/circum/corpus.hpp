#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

// Vertices 0..n-1, edge i joins pairs[i].
MultiGraph from_pairs(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs);
// Relabels vertices and edges to 0..n-1 and 0..m-1 in id order.
MultiGraph compact(const MultiGraph& g);

MultiGraph k4();
MultiGraph theta();
MultiGraph prism();
MultiGraph k33();
MultiGraph cube();
MultiGraph petersen();
MultiGraph moebius_kantor();
MultiGraph k5();

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

std::vector<NamedGraph> named_corpus();

MultiGraph random_cubic_3connected(int n, std::uint64_t seed);

// A random cubic 3-connected graph with 1..contractions random connected
// vertex sets contracted; 3-edge-connected, usually not cubic.
MultiGraph random_3_edge_connected(int n, int contractions, std::uint64_t seed);

// Brute force over vertex bijections; meant for small graphs.
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

// Replaces vertex v (degree 3) by a 3-connected piece of `order` vertices
// (odd); the three edges at v keep their ids.
MultiGraph blow_up(const MultiGraph& g, VertexId v, int order, std::uint64_t seed = 1);

}  // namespace circum
