#include <gtest/gtest.h>

#include <set>

#include "circum/connectivity.hpp"
#include "circum/corpus.hpp"
#include "circum/cycle.hpp"
#include "circum/figures.hpp"
#include "circum/long_cycle.hpp"
#include "circum/oracle.hpp"

using namespace circum;

namespace {

// Edge-index sets of every cycle, from the independent enumerator.
std::vector<std::set<int>> cycle_sets(const MultiGraph& g) {
  std::vector<std::set<int>> out;
  for (const auto& c : all_cycles(g).edges) out.emplace_back(c.begin(), c.end());
  return out;
}

bool exists_through(const std::vector<std::set<int>>& cs, std::initializer_list<int> need) {
  for (const auto& c : cs) {
    bool all = true;
    for (int i : need) all = all && c.count(i);
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(CycleSearch, TwoEdgesSpecExamples) {
  Cycle t = cycle_through_two_edges(theta(), 0, 1);
  EXPECT_EQ(t.edges.size(), 2u);
  Cycle k = cycle_through_two_edges(k4(), 0, 5);  // 01 and 23
  EXPECT_TRUE(is_valid_cycle(k4(), k));
  EXPECT_TRUE(contains_edge(k, 0) && contains_edge(k, 5));
  MultiGraph bridge = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  try {
    cycle_through_two_edges(bridge, 0, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwoConnected);
  }
}

TEST(CycleSearch, ThreeEdgesSpecExamples) {
  EXPECT_FALSE(cycle_through_three_edges(prism(), 6, 7, 8));
  auto c = cycle_through_three_edges(k4(), 0, 3, 5);  // 01, 12, 23
  ASSERT_TRUE(c);
  EXPECT_EQ(c->edges.size(), 4u);
  MultiGraph k = k33();
  auto h = cycle_through_three_edges(k, 0, 4, 8);  // 03, 14, 25
  ASSERT_TRUE(h);
  EXPECT_EQ(h->edges.size(), 6u);
}

TEST(CycleSearch, ThreeEdgesMatchesEnumeration) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    MultiGraph g = random_cubic_3connected(8 + 2 * (s % 3), s);
    auto cs = cycle_sets(g);
    const int m = g.size();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          auto got = cycle_through_three_edges(g, g.edge_at(a).id, g.edge_at(b).id, g.edge_at(c).id);
          ASSERT_EQ(got.has_value(), exists_through(cs, {a, b, c})) << a << " " << b << " " << c;
          if (got) {
            EXPECT_TRUE(is_valid_cycle(g, *got));
            for (int i : {a, b, c}) EXPECT_TRUE(contains_edge(*got, g.edge_at(i).id));
          }
        }
  }
}

TEST(CycleSearch, TwoEdgesAlwaysFoundInThreeConnected) {
  MultiGraph g = petersen();
  for (const Edge& a : g.edges())
    for (const Edge& b : g.edges()) {
      if (a.id >= b.id) continue;
      Cycle c = cycle_through_two_edges(g, a.id, b.id);
      EXPECT_TRUE(is_valid_cycle(g, c));
      EXPECT_TRUE(contains_edge(c, a.id) && contains_edge(c, b.id));
    }
}

TEST(CycleSearch, Lemma3OnK4) {
  // u = 0, e = 23 (edge 5), so u is not on e
  Lemma3Result r = lemma3_cycle(k4(), 0, 5, 2);
  EXPECT_TRUE(r.k == 1 || r.k == 2);
  EXPECT_TRUE(is_valid_cycle(r.graph, r.cycle));
  try {
    lemma3_cycle(k4(), 2, 5, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(CycleSearch, Lemma3OnSmallestCaseTwoShape) {
  Instance in = fig3_instance({});
  CaseDecomposition cd = decompose(in.graph, in.weights, in.e, in.f);
  ASSERT_EQ(cd.branch, "L6.case2");
  // contract as the last case-two candidate does, then look at u = the merged W
  const MultiGraph& g = in.graph;
  EXPECT_TRUE(is_3_connected(g));
  for (VertexId u : g.vertices())
    for (const Edge& e : g.edges()) {
      if (e.touches(u)) continue;
      for (EdgeId keep : g.incident(u)) {
        Lemma3Result r;
        try {
          r = lemma3_cycle(g, u, e.id, keep);
        } catch (const Error& err) {
          EXPECT_EQ(err.code(), ErrorCode::HypothesisViolated);
          continue;
        }
        EXPECT_TRUE(is_valid_cycle(r.graph, r.cycle));
        EXPECT_TRUE(is_3_connected(r.graph));
      }
    }
}

TEST(Cycle, ValidityAndWeight) {
  MultiGraph g = k4();
  Cycle c{{0, 3, 5, 2}};  // 0-1-2-3-0
  EXPECT_TRUE(is_valid_cycle(g, c));
  EXPECT_EQ(cycle_weight(g, WeightMap::uniform(g, 2), c), 8);
  EXPECT_FALSE(is_valid_cycle(g, Cycle{{0, 3}}));
  EXPECT_TRUE(same_cycle(c, Cycle{{2, 5, 3, 0}}));
}
