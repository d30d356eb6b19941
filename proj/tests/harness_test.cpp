#include <gtest/gtest.h>

#include "circum/corpus.hpp"
#include "circum/cuts.hpp"
#include "circum/figures.hpp"
#include "circum/io.hpp"
#include "circum/long_cycle.hpp"
#include "circum/oracle.hpp"
#include "circum/verify.hpp"

using namespace circum;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST(Io, TextRoundTrip) {
  MultiGraph g = petersen();
  WeightMap w;
  for (VertexId v : g.vertices()) w.set(v, v * 3);
  WeightedGraph back = parse_graph(to_text(g, w));
  EXPECT_EQ(back.graph, g);
  for (VertexId v : g.vertices()) EXPECT_EQ(back.weights[v], w[v]);
}

TEST(Io, JsonRoundTrip) {
  MultiGraph g = theta();
  WeightMap w = WeightMap::uniform(g, 4);
  WeightedGraph back = parse_graph(to_json(g, w).dump());
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.weights.total(back.graph), 8);
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(parse_code("graph 2 1\nvertex 0 1\nvertex 1\nedge 0 0 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("nonsense"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"vertices\": 3}"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("graph 2 1\nvertex 0 1\nvertex 1 1\nedge 0 0 5\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("graph 2 1\nvertex 0 1\nvertex 1 1\nedge 0 0 0\n"), ErrorCode::ParseError);
}

TEST(Oracle, KnownCircumferences) {
  MultiGraph p = petersen();
  EXPECT_EQ(oracle_max_cycle(p, WeightMap::uniform(p, 1)).weight, 9);
  MultiGraph k = k33();
  EXPECT_EQ(oracle_max_cycle(k, WeightMap::uniform(k, 1)).weight, 6);
  MultiGraph q = cube();
  OracleResult r = oracle_max_cycle(q, WeightMap::uniform(q, 2), q.edge_at(0).id, q.edge_at(5).id);
  EXPECT_EQ(r.weight, 16);
}

TEST(Oracle, PairMaximaAgreeWithSearch) {
  MultiGraph g = random_cubic_3connected(10, 4);
  WeightMap w;
  for (VertexId v : g.vertices()) w.set(v, (v * 5) % 7);
  CycleTable t = all_cycles(g);
  std::vector<Weight> best = pair_maxima(g, t, w);
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      EXPECT_EQ(best[a * g.size() + b], oracle_max_cycle(g, w, g.edge_at(a).id, g.edge_at(b).id).weight);
}

TEST(Figures, FigureTwoShape) {
  Instance in = fig2_instance({{1, 2, 3, 4, 5}, {3, 1, 1, 1, 5}, 2, 6, 2});
  ASSERT_EQ(in.slots.size(), 5u);
  EXPECT_EQ(in.slots[0].size(), 3u);
  EXPECT_EQ(in.slots[4].size(), 5u);
  EXPECT_EQ(in.outside.size(), 2u);
  EXPECT_EQ(in.weights.total(in.graph), 21);
  EXPECT_TRUE(in.graph.adjacent_edges(in.e, in.f));
  for (const VertexSet& x : in.slots) EXPECT_EQ(boundary(in.graph, x).size(), 3u);
}

TEST(Figures, FigureThreeShape) {
  Instance in = fig3_instance({});
  EXPECT_EQ(decompose(in.graph, in.weights, in.e, in.f).branch, "L6.case2");
  Instance shared = fig3_instance({{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, 0, 0, Fig3Exit::SharedX1X3, 1});
  EXPECT_EQ(decompose(shared.graph, shared.weights, shared.e, shared.f).branch, "L6.case2");
}

TEST(Figures, EvenSpread) {
  Instance in = fig2_instance({{0, 0, 0, 0, 0}, {3, 1, 1, 1, 1}, 0, 0, 1});
  const std::array<Weight, 5> x{7, 0, 0, 0, 0};
  assign_weights(in, x, 0);
  std::vector<Weight> got;
  for (VertexId v : in.slots[0]) got.push_back(in.weights[v]);
  EXPECT_EQ(got, (std::vector<Weight>{3, 2, 2}));
}

TEST(Figures, CorpusInstancesAreSolved) {
  for (const Instance& in : figure_corpus()) {
    CycleResult r = long_cycle(in.graph, in.weights, in.e, in.f);
    EXPECT_TRUE(meets(r.weight, r.bound)) << in.name;
    EXPECT_LE(r.weight, oracle_max_cycle(in.graph, in.weights, in.e, in.f).weight) << in.name;
  }
}

TEST(Verify, SmallRunIsCleanAndDeterministic) {
  VerifyOptions o;
  o.trials = 6;
  o.nmax = 10;
  o.corpus = false;
  VerifyReport a = verify(o), b = verify(o);
  EXPECT_EQ(a.failed, 0);
  EXPECT_GT(a.instances, 0);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  o.seed = 8;
  EXPECT_NE(to_json(verify(o)).dump(), to_json(a).dump());
}
