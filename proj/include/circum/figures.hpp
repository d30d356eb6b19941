#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

struct Instance {
  std::string name;
  MultiGraph graph;
  WeightMap weights;
  EdgeId e = kNoEdge;
  EdgeId f = kNoEdge;
  std::vector<VertexSet> slots;  // weighted pieces, in parameter order
  VertexSet outside;
};

// Spreads each weight evenly over its slot (remainder to the lowest ids).
void assign_weights(Instance& in, std::span<const Weight> x, Weight z);

// Adjacent e = u1u2, f = u2u3 with five disjoint pieces X1..X5 hanging off
// the path and (X1 u X2) disjoint from (X3 u X4). Piece orders are odd;
// z_order more vertices lie outside the pieces. Piece and outside weights
// are spread evenly over their vertices.
struct Fig2Params {
  std::array<Weight, 5> x{1, 1, 1, 1, 1};
  std::array<int, 5> orders{1, 1, 1, 1, 1};
  int z_order = 0;
  Weight z = 0;
  std::uint64_t seed = 1;
};

Instance fig2_instance(const Fig2Params& p);

enum class Fig3Exit { None, SharedX1X3 };

// Adjacent e, f with X2 = X4 = Y1, e6 the third edge leaving Y1 and Y2 the
// maximal side behind it. Order and weight slots: X1, X3, X5, Y1, Y2.
// With SharedX1X3 the X3 and Y2 slots are ignored. Y2 never meets X5 once
// X1 != X3, so there is no builder for that shape.
struct Fig3Params {
  std::array<Weight, 5> x{1, 1, 1, 1, 1};
  std::array<int, 5> orders{1, 1, 1, 1, 1};
  int z_order = 0;
  Weight z = 0;
  Fig3Exit exit = Fig3Exit::None;
  std::uint64_t seed = 1;
};

Instance fig3_instance(const Fig3Params& p);

// First edge pair (scanning seeds upward from `seed`) of a random cubic
// 3-connected graph of order n whose decomposition lands on `branch`
// (a CaseDecomposition label). Slots are the distinct pieces in frame order.
Instance branch_instance(const std::string& branch, int n, std::uint64_t seed);

// Fixed parameter sets for both figures, chosen so that every candidate of
// the adjacent case and the rarer nonadjacent candidates win somewhere.
std::vector<Instance> figure_corpus();

}  // namespace circum
