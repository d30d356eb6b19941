#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

enum class StepKind { Contract, Suppress, Smooth, Insert };

// A derived edge replaced by a path in the parent graph, oriented from the
// derived edge's u end to its v end. via[i] sits between edges[i] and edges[i+1].
struct PathMap {
  EdgeId derived = kNoEdge;
  std::vector<EdgeId> edges;
  std::vector<VertexId> via;
};

struct Provenance {
  StepKind kind = StepKind::Contract;
  std::vector<PathMap> edge_map;                              // changed edges only
  std::vector<std::pair<VertexId, VertexSet>> vertex_map;     // new vertices
  std::vector<EdgeId> dropped;                                // parent edges with no image
  std::vector<VertexId> removed;                              // parent vertices with no image

  // Parent path of a derived edge; survivors map to themselves.
  std::vector<EdgeId> parent_path(EdgeId derived) const;
  VertexSet parent_vertices(VertexId derived) const;
};

std::pair<MultiGraph, Provenance> contract(const MultiGraph& g, std::span<const VertexSet> pieces);
std::pair<MultiGraph, Provenance> suppress_edge(const MultiGraph& g, EdgeId e);
std::pair<MultiGraph, Provenance> smooth_vertex(const MultiGraph& g, VertexId x);
std::pair<MultiGraph, Provenance> insert_edge(const MultiGraph& g, EdgeId ei, EdgeId ej,
                                              std::optional<EdgeId> name = std::nullopt);

struct ContractStep { std::vector<VertexSet> pieces; };
struct SuppressStep { EdgeId edge; };
struct SmoothStep { VertexId vertex; };
struct InsertStep { EdgeId ei; EdgeId ej; };
using Step = std::variant<ContractStep, SuppressStep, SmoothStep, InsertStep>;

// Steps name things in base terms: vertex sets of the base graph and base
// edges. Each step is resolved against the current graph through provenance.
struct DerivationScript {
  std::vector<Step> steps;
};

struct SkeletonStep {
  VertexSet blob;   // base vertices visited here (singleton or contracted piece)
  EdgeId exit;      // base edge leaving the blob
};

// Cyclic sequence: blob[i] is entered through steps[i-1].exit.
struct ClosedSkeleton {
  std::vector<SkeletonStep> steps;
};

struct Cycle;

class Derivation {
 public:
  Derivation(const MultiGraph& base, const WeightMap& w);

  const MultiGraph& base() const { return *base_; }
  const MultiGraph& graph() const { return cur_; }
  const WeightMap& weights() const { return w_; }
  const DerivationScript& script() const { return script_; }

  // Pieces are sets of base vertices; every current vertex whose base blob
  // meets a piece joins it. Returns the new vertex ids.
  std::vector<VertexId> contract(std::vector<VertexSet> pieces);
  void suppress(EdgeId base_edge);
  void smooth(VertexId current_vertex);
  void apply(const Step& s);

  EdgeId current_edge(EdgeId base_edge) const;
  VertexId current_vertex(VertexId base_vertex) const;
  const VertexSet& blob(VertexId current_vertex) const;

  ClosedSkeleton lift(const Cycle& c) const;

 private:
  struct BasePath {
    std::vector<EdgeId> edges;
    std::vector<VertexSet> inner;
  };
  void reset_owner();
  void compose(const Provenance& prov, MultiGraph g2);
  void require_no_insert() const;

  const MultiGraph* base_;
  MultiGraph cur_;
  WeightMap w_;
  DerivationScript script_;
  std::vector<VertexSet> blob_;       // by current vertex id
  std::vector<BasePath> path_;        // by current edge id
  std::vector<EdgeId> owner_;         // base edge id -> current edge id
};

MultiGraph replay(const MultiGraph& base, const DerivationScript& script);

}  // namespace circum
