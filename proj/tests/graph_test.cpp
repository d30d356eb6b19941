#include <gtest/gtest.h>

#include "circum/connectivity.hpp"
#include "circum/corpus.hpp"
#include "circum/cycle.hpp"
#include "circum/derivation.hpp"

using namespace circum;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalError;
}

}  // namespace

TEST(MultiGraph, DenseIndicesFollowIds) {
  MultiGraph g({7, 3, 5}, {{10, 3, 5}, {4, 5, 7}, {8, 7, 3}});
  EXPECT_EQ(g.vertex_index(3), 0);
  EXPECT_EQ(g.vertex_index(7), 2);
  EXPECT_EQ(g.edge_at(0).id, 4);
  EXPECT_EQ(g.next_vertex_id(), 8);
  EXPECT_EQ(g.next_edge_id(), 11);
  EXPECT_EQ(g.degree(5), 2);
}

TEST(MultiGraph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { MultiGraph({0, 1}, {{0, 0, 0}}); }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { MultiGraph({0, 1}, {{0, 0, 2}}); }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { MultiGraph({0, 1}, {{0, 0, 1}, {0, 0, 1}}); }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { MultiGraph({0, 0}, {}); }), ErrorCode::InvalidGraph);
}

TEST(MultiGraph, ParallelEdgesKeepIdentity) {
  MultiGraph t = theta();
  EXPECT_EQ(t.edges_between(0, 1).size(), 3u);
  EXPECT_TRUE(t.is_cubic());
  EXPECT_TRUE(is_theta(t));
  EXPECT_TRUE(t.adjacent_edges(0, 1));
}

TEST(Corpus, NamedGraphsAreCubicAndThreeConnected) {
  for (const NamedGraph& ng : named_corpus()) {
    EXPECT_TRUE(ng.graph.is_cubic()) << ng.name;
    EXPECT_TRUE(is_3_connected(ng.graph)) << ng.name;
  }
  EXPECT_EQ(petersen().order(), 10);
  EXPECT_EQ(moebius_kantor().order(), 16);
}

TEST(Corpus, SixVertexGeneratorGivesOnlyPrismAndK33) {
  bool saw_prism = false, saw_k33 = false;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    MultiGraph g = random_cubic_3connected(6, s);
    bool p = isomorphic(g, prism()), k = isomorphic(g, k33());
    ASSERT_TRUE(p || k) << "seed " << s;
    saw_prism |= p;
    saw_k33 |= k;
  }
  EXPECT_TRUE(saw_prism);
  EXPECT_TRUE(saw_k33);
}

TEST(Corpus, GeneratorBasics) {
  EXPECT_TRUE(isomorphic(random_cubic_3connected(4, 9), k4()));
  EXPECT_EQ(code_of([] { random_cubic_3connected(7, 1); }), ErrorCode::OddOrder);
  for (int n = 4; n <= 20; n += 2)
    for (std::uint64_t s = 0; s < 5; ++s) {
      MultiGraph g = random_cubic_3connected(n, s);
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(g.is_cubic());
      EXPECT_TRUE(is_3_connected(g));
      EXPECT_EQ(g, random_cubic_3connected(n, s));
    }
}

TEST(Corpus, BlowUpKeepsEdgeIds) {
  MultiGraph p = petersen();
  MultiGraph g = blow_up(p, 0, 5, 3);
  EXPECT_EQ(g.order(), 14);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_TRUE(is_3_connected(g));
  for (const Edge& e : p.edges()) EXPECT_TRUE(g.has_edge(e.id));
}

TEST(Connectivity, EdgeConnectivityAgainstBruteForce) {
  // brute force: remove every set of k-1 edges and test connectivity
  auto brute = [](const MultiGraph& g, int k) {
    const int m = g.size();
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges()) ids.push_back(e.id);
    for (int a = 0; a < m; ++a) {
      if (k == 2) {
        std::vector<EdgeId> rm{ids[a]};
        if (component(g, g.vertex_at(0), rm).size() != static_cast<std::size_t>(g.order())) return false;
        continue;
      }
      for (int b = a + 1; b < m; ++b) {
        std::vector<EdgeId> rm{ids[a], ids[b]};
        if (component(g, g.vertex_at(0), rm).size() != static_cast<std::size_t>(g.order())) return false;
      }
    }
    return true;
  };
  for (std::uint64_t s = 0; s < 30; ++s) {
    MultiGraph g = random_3_edge_connected(12, 1 + s % 3, s);
    EXPECT_EQ(edge_connectivity_at_least(g, 3), brute(g, 3));
    EXPECT_TRUE(edge_connectivity_at_least(g, 3));
  }
  MultiGraph path = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_EQ(edge_connectivity_at_least(path, 3), brute(path, 3));
  EXPECT_FALSE(edge_connectivity_at_least(path, 3));
  EXPECT_TRUE(edge_connectivity_at_least(path, 2));
}

TEST(Derivation, ContractSuppressAndSmooth) {
  MultiGraph g = prism();
  auto [h, prov] = contract(g, std::vector<VertexSet>{{0, 1, 2}});
  EXPECT_EQ(h.order(), 4);
  EXPECT_TRUE(h.is_cubic());
  EXPECT_TRUE(isomorphic(h, k4()));
  EXPECT_EQ(prov.parent_vertices(h.vertices().back()), (VertexSet{0, 1, 2}));

  auto [s, sp] = suppress_edge(g, 6);  // 0-3
  EXPECT_EQ(s.order(), 4);
  EXPECT_TRUE(s.is_cubic());
  for (const Edge& e : s.edges()) {
    auto path = sp.parent_path(e.id);
    EXPECT_FALSE(path.empty());
  }
}

TEST(Derivation, SuppressRejectsParallelRemainder) {
  MultiGraph t = theta();
  EXPECT_EQ(code_of([&] { suppress_edge(t, 0); }), ErrorCode::ParallelRemainder);
}

TEST(Derivation, SuppressOnK4GivesTheta) {
  auto [h, prov] = suppress_edge(k4(), 0);
  EXPECT_TRUE(is_theta(h));
}

TEST(Derivation, ContractTriangleOfK4GivesTheta) {
  auto [h, prov] = contract(k4(), std::vector<VertexSet>{{0, 1, 2}});
  EXPECT_TRUE(is_theta(h));
  EXPECT_EQ(code_of([] { contract(k4(), std::vector<VertexSet>{{0, 1}, {1, 2}}); }), ErrorCode::OverlappingPieces);
}

TEST(Derivation, InsertIntoThetaGivesK4) {
  auto [g, prov] = insert_edge(theta(), 0, 1);
  EXPECT_TRUE(isomorphic(g, k4()));
  auto [back, p2] = suppress_edge(g, g.next_edge_id() - 1);
  EXPECT_TRUE(isomorphic(back, theta()));
}

TEST(Derivation, InsertAddsTwoVertices) {
  auto [g, prov] = insert_edge(k4(), 0, 5);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_TRUE(is_3_connected(g));
  EXPECT_EQ(code_of([] { insert_edge(k4(), 0, 0); }), ErrorCode::SameEdge);
}

TEST(Derivation, ReplayMatchesIncrementalBuild) {
  MultiGraph g = petersen();
  Derivation d(g, WeightMap::uniform(g, 1));
  d.contract({{0, 1}});
  EdgeId inner = kNoEdge;
  for (const Edge& e : d.graph().edges())
    if (d.graph().degree(e.u) == 3 && d.graph().degree(e.v) == 3) inner = e.id;
  d.suppress(inner);
  EXPECT_EQ(replay(g, d.script()), d.graph());
}

TEST(Derivation, LiftedCycleExpandsPieces) {
  MultiGraph g = prism();
  Derivation d(g, WeightMap::uniform(g, 1));
  std::vector<VertexId> v = d.contract({{0, 1, 2}});
  const MultiGraph& h = d.graph();
  std::optional<Cycle> c = find_cycle_through(h, std::vector<EdgeId>{6, 7});
  ASSERT_TRUE(c);
  ClosedSkeleton sk = d.lift(*c);
  int blobs = 0;
  for (const SkeletonStep& st : sk.steps) blobs += st.blob.size() > 1;
  EXPECT_EQ(blobs, 1);
  EXPECT_EQ(d.blob(v[0]), (VertexSet{0, 1, 2}));
}
