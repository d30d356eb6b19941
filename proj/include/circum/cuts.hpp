#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

struct CutSide {
  VertexSet side;
  std::vector<EdgeId> cut_edges;  // boundary of side, sorted
  friend bool operator==(const CutSide&, const CutSide&) = default;
};

CutSide make_cut_side(const MultiGraph& g, VertexSet side);

struct MinCut {
  int value = 0;
  CutSide sink_side;  // largest minimum cut side containing T
};

// Unit capacities; flow stops early once it reaches `cap`.
MinCut min_edge_cut(const MultiGraph& g, std::span<const VertexId> s, std::span<const VertexId> t,
                    int cap = 1 << 30);

// Largest X with e in its boundary, three boundary edges and no forbidden vertex.
CutSide maximal_3cut_side(const MultiGraph& g, EdgeId e, std::span<const VertexId> forbidden);

CutSide submodular_union(const MultiGraph& g, const CutSide& a, const CutSide& b);

// Side contains e's ends, f's ends are outside.
std::optional<CutSide> find_2_edge_cut_separating(const MultiGraph& g, EdgeId e, EdgeId f);

// Any 2-edge cut, side chosen smaller (ties: the side without the lowest vertex id).
std::optional<CutSide> find_2_edge_cut(const MultiGraph& g);

// Each cut once; the smaller side is reported (ties: the side without the
// smallest vertex id). Cuts sorted by cut edge ids.
std::vector<CutSide> enumerate_3_edge_cuts(const MultiGraph& g, std::optional<EdgeId> containing = {});

bool is_trivial(const MultiGraph& g, const CutSide& c);

}  // namespace circum
