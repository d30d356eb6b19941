#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circum/cycle.hpp"
#include "circum/graph.hpp"

namespace circum {

struct OracleResult {
  bool found = false;
  Weight weight = 0;
  Cycle cycle;
};

// Exact maximum-weight cycle through e (and f); any cycle when e is absent.
// Throws BudgetExceeded once budget_ms of wall time is spent (0: unlimited).
OracleResult oracle_max_cycle(const MultiGraph& g, const WeightMap& w, std::optional<EdgeId> e = {},
                              std::optional<EdgeId> f = {}, std::int64_t budget_ms = 0);

// Every cycle of g once, as dense edge and vertex index lists.
struct CycleTable {
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> vertices;
};

CycleTable all_cycles(const MultiGraph& g);

// best[i * m + j]: maximum cycle weight through edges at dense indices i and j
// (-1 when no cycle contains both).
std::vector<Weight> pair_maxima(const MultiGraph& g, const CycleTable& t, const WeightMap& w);

}  // namespace circum
