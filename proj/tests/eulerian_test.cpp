#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "circum/connectivity.hpp"
#include "circum/corpus.hpp"
#include "circum/eulerian.hpp"

using namespace circum;

namespace {

// Independent check: every vertex of the edge set has even degree and the
// edges form one component.
bool even_and_connected(const MultiGraph& g, const std::vector<EdgeId>& es) {
  if (es.empty()) return false;
  std::map<VertexId, int> deg;
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId id : es) {
    const Edge& e = g.edge(id);
    ++deg[e.u];
    ++deg[e.v];
    parent.try_emplace(e.u, e.u);
    parent.try_emplace(e.v, e.v);
    parent[find(e.u)] = find(e.v);
  }
  const VertexId root = find(deg.begin()->first);
  for (const auto& [v, d] : deg)
    if (d % 2 || find(v) != root) return false;
  return true;
}

}  // namespace

TEST(Eulerian, EdgeSetPredicate) {
  MultiGraph k = k4();
  EXPECT_TRUE(is_eulerian_edge_set(k, {0, 3, 1}));  // triangle 0-1-2
  EXPECT_FALSE(is_eulerian_edge_set(k, {0, 3}));
  EXPECT_FALSE(is_eulerian_edge_set(k, {}));
  MultiGraph two = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(is_eulerian_edge_set(two, {0, 1, 2, 3, 4, 5}));
}

TEST(Eulerian, ExpandVertexOfK5) {
  MultiGraph g = k5();
  WeightMap w = WeightMap::uniform(g, 3);
  Expanded x = expand_vertex(g, w, 0);
  EXPECT_EQ(x.graph.order(), 8);
  EXPECT_EQ(x.weights.total(x.graph), w.total(g));
  EXPECT_EQ(x.expansion.cycle.size(), 4u);
  for (VertexId v : x.expansion.cycle) EXPECT_EQ(x.graph.degree(v), 3);
  try {
    expand_vertex(prism(), WeightMap{}, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooSmall);
  }
}

TEST(Eulerian, CubifyK5) {
  MultiGraph g = k5();
  Cubified c = cubify(g, WeightMap::uniform(g, 1));
  EXPECT_TRUE(c.graph.is_cubic());
  EXPECT_TRUE(is_3_connected(c.graph));
  EXPECT_EQ(c.graph.order(), 20);
  EXPECT_EQ(c.weights.total(c.graph), 5);
}

TEST(Eulerian, K5WithUnitWeights) {
  MultiGraph g = k5();
  WeightMap w = WeightMap::uniform(g, 1);
  EulerianResult r = eulerian_subgraph(g, w, 0);
  EXPECT_TRUE(even_and_connected(g, r.edges));
  EXPECT_TRUE(std::binary_search(r.edges.begin(), r.edges.end(), 0));
  EXPECT_GE(r.weight + 1e-9, std::pow(5.0, 0.8));
}

TEST(Eulerian, RejectsTwoEdgeConnected) {
  MultiGraph g = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}});
  try {
    eulerian_subgraph(g, WeightMap{}, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(Eulerian, RandomContractionsMeetTheBound) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    MultiGraph g = random_3_edge_connected(8 + 2 * (s % 3), 1 + s % 3, s);
    WeightMap w;
    for (VertexId v : g.vertices()) w.set(v, static_cast<Weight>((v * 7 + s) % 11));
    const EdgeId e = g.edge_at(0).id, f = g.edge_at(g.size() - 1).id;
    for (std::optional<EdgeId> second : {std::optional<EdgeId>{}, std::optional<EdgeId>{f}}) {
      EulerianResult r = eulerian_subgraph(g, w, e, second);
      EXPECT_TRUE(r.lifted.graph.is_cubic());
      EXPECT_TRUE(is_3_connected(r.lifted.graph));
      EXPECT_TRUE(even_and_connected(g, r.edges));
      EXPECT_TRUE(std::binary_search(r.edges.begin(), r.edges.end(), e));
      if (second) EXPECT_TRUE(std::binary_search(r.edges.begin(), r.edges.end(), f));
      Weight sum = 0;
      for (VertexId v : r.vertices) sum += w[v];
      EXPECT_EQ(sum, r.weight);
      const double need = second ? r.bound : std::pow(static_cast<double>(w.total(g)), 0.8);
      EXPECT_GE(r.weight + 1e-9, need);
    }
  }
}
