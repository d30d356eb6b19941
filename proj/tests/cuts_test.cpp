#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "circum/connectivity.hpp"
#include "circum/corpus.hpp"
#include "circum/cuts.hpp"

using namespace circum;

namespace {

VertexSet subset(const MultiGraph& g, std::uint32_t mask) {
  VertexSet s;
  for (int i = 0; i < g.order(); ++i)
    if (mask >> i & 1u) s.push_back(g.vertex_at(i));
  return s;
}

// Every 3-edge cut side of g, both sides, by subset enumeration.
std::vector<VertexSet> brute_3_sides(const MultiGraph& g) {
  std::vector<VertexSet> out;
  const std::uint32_t full = (1u << g.order()) - 1;
  for (std::uint32_t m = 1; m < full; ++m) {
    VertexSet s = subset(g, m);
    if (boundary(g, s).size() == 3) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Boundary, Basics) {
  EXPECT_EQ(boundary(k4(), VertexSet{0}).size(), 3u);
  auto b = boundary(prism(), VertexSet{0, 1, 2});
  EXPECT_EQ(b, (std::vector<EdgeId>{6, 7, 8}));
  MultiGraph p = petersen();
  EXPECT_TRUE(boundary(p, VertexSet(p.vertices().begin(), p.vertices().end())).empty());
}

TEST(MinCut, SmallCases) {
  EXPECT_EQ(min_edge_cut(k4(), VertexSet{0}, VertexSet{1}).value, 3);
  MinCut m = min_edge_cut(prism(), VertexSet{0, 1, 2}, VertexSet{3, 4, 5});
  EXPECT_EQ(m.value, 3);
  EXPECT_EQ(m.sink_side.side, (VertexSet{3, 4, 5}));
  MultiGraph two({0, 1, 2, 3}, {{0, 0, 1}, {1, 2, 3}});
  EXPECT_EQ(min_edge_cut(two, VertexSet{0}, VertexSet{3}).value, 0);
}

TEST(Connectivity, SpecExamples) {
  EXPECT_TRUE(is_3_connected(petersen()));
  EXPECT_TRUE(is_3_connected(theta()));
  MultiGraph p = prism();
  std::vector<Edge> es(p.edges().begin(), p.edges().end());
  es.erase(es.begin() + 6);
  MultiGraph q(std::vector<VertexId>(p.vertices().begin(), p.vertices().end()), es);
  EXPECT_TRUE(edge_connectivity_at_least(q, 2));
  EXPECT_FALSE(edge_connectivity_at_least(q, 3));
}

TEST(MaximalSide, SpecExamples) {
  EXPECT_EQ(maximal_3cut_side(k4(), 2, VertexSet{0, 1, 2}).side, (VertexSet{3}));
  MultiGraph p = prism();
  EXPECT_EQ(maximal_3cut_side(p, 6, VertexSet{0, 1, 2}).side, (VertexSet{3, 4, 5}));
  EXPECT_EQ(maximal_3cut_side(p, 6, VertexSet{0}).side, (VertexSet{1, 2, 3, 4, 5}));
}

TEST(MaximalSide, AgreesWithSubsetEnumeration) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    MultiGraph g = random_cubic_3connected(10 + 2 * (s % 2), s);
    std::vector<VertexSet> sides = brute_3_sides(g);
    for (const Edge& e : g.edges()) {
      VertexSet forbidden{e.u};
      // oracle: the largest qualifying side, which must contain every other
      VertexSet best;
      for (const VertexSet& x : sides) {
        auto b = boundary(g, x);
        if (std::find(b.begin(), b.end(), e.id) == b.end() || set_contains(x, e.u)) continue;
        if (x.size() > best.size()) best = x;
      }
      for (const VertexSet& x : sides) {
        auto b = boundary(g, x);
        if (std::find(b.begin(), b.end(), e.id) != b.end() && !set_contains(x, e.u))
          EXPECT_TRUE(std::includes(best.begin(), best.end(), x.begin(), x.end()));
      }
      EXPECT_EQ(maximal_3cut_side(g, e.id, forbidden).side, best);
    }
  }
}

TEST(ThreeCuts, EnumerationAgainstSubsets) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    MultiGraph g = random_cubic_3connected(12, s);
    std::set<std::vector<EdgeId>> want;
    for (const VertexSet& x : brute_3_sides(g)) want.insert(boundary(g, x));
    std::set<std::vector<EdgeId>> got;
    for (const CutSide& c : enumerate_3_edge_cuts(g)) {
      EXPECT_EQ(boundary(g, c.side), c.cut_edges);
      EXPECT_LE(c.side.size() * 2, static_cast<std::size_t>(g.order()));
      got.insert(c.cut_edges);
    }
    EXPECT_EQ(got, want);
  }
}

TEST(ThreeCuts, SpecExamples) {
  EXPECT_EQ(enumerate_3_edge_cuts(k4()).size(), 4u);
  auto pc = enumerate_3_edge_cuts(prism());
  EXPECT_EQ(pc.size(), 7u);
  int nontrivial = 0;
  for (const CutSide& c : pc) nontrivial += !is_trivial(prism(), c);
  EXPECT_EQ(nontrivial, 1);
  for (const CutSide& c : enumerate_3_edge_cuts(petersen())) EXPECT_TRUE(is_trivial(petersen(), c));
}

TEST(TwoCuts, SeparatingPair) {
  // two K4-minus-an-edge blocks joined by two edges
  MultiGraph g = from_pairs(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                                {0, 4}, {3, 7}});
  auto c = find_2_edge_cut_separating(g, 2, 7);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->cut_edges, (std::vector<EdgeId>{10, 11}));
  EXPECT_FALSE(find_2_edge_cut_separating(g, 0, 1));
  EXPECT_FALSE(find_2_edge_cut_separating(petersen(), 0, 9));
  EXPECT_FALSE(find_2_edge_cut(petersen()));
}

TEST(Submodular, UnionOfCrossingSides) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    MultiGraph g = random_cubic_3connected(10, s);
    std::vector<VertexSet> sides = brute_3_sides(g);
    for (const VertexSet& a : sides)
      for (const VertexSet& b : sides) {
        VertexSet u = set_union(a, b);
        if (!sets_intersect(a, b) || u.size() == static_cast<std::size_t>(g.order())) continue;
        CutSide r = submodular_union(g, make_cut_side(g, a), make_cut_side(g, b));
        EXPECT_EQ(r.side, u);
        EXPECT_EQ(r.cut_edges.size(), 3u);
      }
  }
}
