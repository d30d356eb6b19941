#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "circum/bounds.hpp"
#include "circum/cycle.hpp"
#include "circum/derivation.hpp"
#include "circum/graph.hpp"

namespace circum {

struct TraceEvent {
  std::string kind;    // reduction, case, claim, relabel, candidate, failed
  std::string label;
  std::string detail;
  Weight weight = 0;
  double bound = 0;
  bool winner = false;
};

struct TraceNode {
  std::string role;
  DerivationScript script;  // derives this node's graph from the parent's graph
  int order = 0;
  EdgeId e = kNoEdge;
  EdgeId f = kNoEdge;
  BoundKind kind = BoundKind::Adjacent;
  Weight total = 0;         // after zeroing the terminals
  double bound = 0;
  Weight achieved = 0;
  std::vector<TraceEvent> events;
  std::deque<TraceNode> children;
};

struct SolveStats {
  std::map<std::string, std::int64_t> histogram;
  std::int64_t calls = 0;
  std::int64_t candidate_failures = 0;
  int max_depth = 0;
  std::vector<std::string> failure_notes;

  void merge(const SolveStats& other);
};

struct LongCycleOptions {
  bool record_trace = true;
  bool verify_claims = true;
  bool check_preconditions = true;
};

struct CycleResult {
  Cycle cycle;
  Weight weight = 0;
  double bound = 0;
  BoundKind kind = BoundKind::Adjacent;
  TraceNode trace;
  SolveStats stats;
};

struct ZeroedWeights {
  WeightMap weights;
  Weight removed = 0;
};

ZeroedWeights zero_terminal_weights(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f);

// Cubic, 2-connected, e != f, and every 2-edge cut separates e from f.
void check_preconditions(const MultiGraph& g, EdgeId e, EdgeId f);

CycleResult long_cycle(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f,
                       const LongCycleOptions& opt = {});

// Lifts a cycle of d.graph() to d.base(), completing every contracted piece
// it passes by a recursive call on the piece with its outside contracted.
Cycle merge_contracted(const Derivation& d, const WeightMap& w, const Cycle& c,
                       const LongCycleOptions& opt = {});

// First reduction that applies at (g, e, f), or an empty string:
// "L6.claim1", "L6.claim2", "L7.claim1" .. "L7.claim4".
std::string applicable_reduction(const MultiGraph& g, EdgeId e, EdgeId f);

struct CaseDecomposition {
  bool adjacent = true;
  std::vector<VertexId> terminals;           // u1..u3 or u1..u4
  std::vector<EdgeId> incident;              // e1..e5, or e11,e12,e21,..,e42
  std::vector<VertexSet> pieces;             // X1..X5 (case 2 relabelled so X2 = X4), or X11,X12,..,X42
  std::vector<Weight> piece_weights;
  VertexSet y1, y2;                          // adjacent case 2
  Weight z = 0;
  std::string branch;                        // L6.case1, L6.case2, L7.claim7, L7.claim8, L7.q0..q2
  int q = 0;
};

// Structure of an instance on which no reduction applies.
CaseDecomposition decompose(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f);

}  // namespace circum
