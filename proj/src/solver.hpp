#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circum/long_cycle.hpp"

namespace circum::detail {

// Open walk through blobs: blobs[k] is left through edges[k].
struct OpenSkeleton {
  std::vector<VertexSet> blobs;
  std::vector<EdgeId> edges;
};

OpenSkeleton reversed(OpenSkeleton s);

using FillFn = std::function<OpenSkeleton(EdgeId entry, EdgeId exit)>;

// Custom completion for the blob containing `rep`.
struct FillRule {
  VertexId rep;
  FillFn fill;
};

FillRule fixed_fill(VertexId rep, OpenSkeleton s, EdgeId in, EdgeId out);
// Fill of the blob containing rule_rep taken from the part of `sk` outside
// the blob containing other_rep.
FillRule complement_fill(const ClosedSkeleton& sk, VertexId other_rep, VertexId rule_rep);

struct Level {
  const MultiGraph& g;
  const WeightMap& w;  // terminals zeroed
  EdgeId e;
  EdgeId f;
  Weight total;
  BoundKind kind;
  double bound;
  TraceNode* node;
  int depth;
};

struct Candidates {
  std::optional<Cycle> winner;
  Weight best = -1;
  std::string best_name;
};

std::optional<VertexSet> reduction_side(const MultiGraph& g, EdgeId e, EdgeId f);
std::pair<EdgeId, EdgeId> other_edges(const MultiGraph& g, VertexId x, EdgeId skip);
EdgeId third_edge(const MultiGraph& g, VertexId x, EdgeId a, EdgeId b);
EdgeId boundary_other(const MultiGraph& g, const VertexSet& x, EdgeId a, EdgeId b = kNoEdge);
std::string describe(const VertexSet& s);
CaseDecomposition decompose_adjacent(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f);
CaseDecomposition decompose_nonadjacent(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f);

class Solver {
 public:
  Solver(const LongCycleOptions& opt, SolveStats& stats) : opt_(opt), stats_(stats) {}

  Cycle solve(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f, TraceNode* node,
              int parent_order, int depth);

  Cycle realize(const Level& L, const ClosedSkeleton& sk, const std::vector<FillRule>& fills);
  ClosedSkeleton descend(const Level& L, const Derivation& d, EdgeId a, EdgeId b, const std::string& role);
  Cycle descend_realize(const Level& L, const Derivation& d, EdgeId a, EdgeId b, const std::string& role,
                        const std::vector<FillRule>& fills = {});

  bool attempt(const Level& L, Candidates& run, const std::string& name,
               const std::function<Cycle()>& build);
  Cycle conclude(const Level& L, Candidates& run, const std::string& where);
  Cycle reduction(const Level& L, const std::string& label, const std::string& detail,
                  const std::function<Cycle()>& build);

  void event(const Level& L, const std::string& kind, const std::string& label,
             const std::string& detail = {});
  void bump(const std::string& label) { ++stats_.histogram[label]; }
  bool verify() const { return opt_.verify_claims; }

  Cycle adjacent_case(const Level& L);
  Cycle nonadjacent_case(const Level& L);

 private:
  void expand(const Level& L, const VertexSet& blob, EdgeId entry, EdgeId exit,
              const std::vector<FillRule>& fills, std::vector<EdgeId>& out);
  void lemma5(const Level& L, const VertexSet& blob, EdgeId entry, EdgeId exit, std::vector<EdgeId>& out);
  TraceNode* child(const Level& L, const std::string& role, const DerivationScript& script);

  const LongCycleOptions& opt_;
  SolveStats& stats_;
};

}  // namespace circum::detail
