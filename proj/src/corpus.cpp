#include "circum/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "circum/connectivity.hpp"
#include "circum/derivation.hpp"

namespace circum {

MultiGraph from_pairs(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  return MultiGraph(std::move(vs), std::move(es));
}

MultiGraph compact(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.push_back({g.vertex_index(e.u), g.vertex_index(e.v)});
  return from_pairs(g.order(), pairs);
}

MultiGraph k4() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

MultiGraph theta() { return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph prism() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph k33() {
  std::vector<std::pair<VertexId, VertexId>> p;
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 3; b < 6; ++b) p.push_back({a, b});
  return from_pairs(6, p);
}

MultiGraph cube() {
  std::vector<std::pair<VertexId, VertexId>> p;
  for (VertexId v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) p.push_back({v, v ^ (1 << b)});
  return from_pairs(8, p);
}

namespace {

MultiGraph generalized_petersen(int n, int k) {
  std::vector<std::pair<VertexId, VertexId>> p;
  for (int i = 0; i < n; ++i) p.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) p.push_back({i, n + i});
  for (int i = 0; i < n; ++i) {
    int j = (i + k) % n;
    if (i < j || k * 2 != n) p.push_back({n + i, n + j});
  }
  return from_pairs(2 * n, p);
}

}  // namespace

MultiGraph petersen() { return generalized_petersen(5, 2); }

MultiGraph moebius_kantor() { return generalized_petersen(8, 3); }

MultiGraph k5() {
  std::vector<std::pair<VertexId, VertexId>> p;
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) p.push_back({a, b});
  return from_pairs(5, p);
}

std::vector<NamedGraph> named_corpus() {
  return {{"K4", k4()},   {"theta", theta()},       {"prism", prism()},
          {"K33", k33()}, {"cube", cube()},         {"petersen", petersen()},
          {"moebius_kantor", moebius_kantor()}};
}

MultiGraph random_cubic_3connected(int n, std::uint64_t seed) {
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "cubic graphs have even order");
  if (n < 4) throw Error(ErrorCode::InvalidGraph, "order must be at least 4");
  std::mt19937_64 rng(seed);
  MultiGraph g = k4();
  while (g.order() < n) {
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    MultiGraph h = insert_edge(g, g.edge_at(i).id, g.edge_at(j).id).first;
    if (is_3_connected(h)) g = std::move(h);
  }
  return compact(g);
}

MultiGraph random_3_edge_connected(int n, int contractions, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MultiGraph g = random_cubic_3connected(n, rng());
  std::uniform_int_distribution<int> count(1, std::max(1, contractions));
  const int k = count(rng);
  for (int t = 0; t < k && g.order() > 4; ++t) {
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    std::uniform_int_distribution<int> size(2, std::max(2, g.order() / 3));
    const int want = size(rng);
    VertexSet piece{g.vertex_at(pick(rng))};
    while (static_cast<int>(piece.size()) < want) {
      std::vector<VertexId> frontier;
      for (VertexId x : piece)
        for (EdgeId id : g.incident(x)) {
          VertexId y = g.edge(id).other(x);
          if (!set_contains(piece, y)) frontier.push_back(y);
        }
      if (frontier.empty()) break;
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      std::uniform_int_distribution<std::size_t> f(0, frontier.size() - 1);
      piece = set_union(piece, {frontier[f(rng)]});
    }
    std::vector<VertexSet> pieces{piece};
    g = compact(contract(g, pieces).first);
  }
  return g;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  auto matrix = [n](const MultiGraph& g) {
    std::vector<int> m(n * n, 0);
    for (const Edge& e : g.edges()) {
      int i = g.vertex_index(e.u), j = g.vertex_index(e.v);
      ++m[i * n + j];
      ++m[j * n + i];
    }
    return m;
  };
  const std::vector<int> ma = matrix(a), mb = matrix(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = ma[i * n + j] == mb[perm[i] * n + perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MultiGraph blow_up(const MultiGraph& g, VertexId v, int order, std::uint64_t seed) {
  if (order % 2 == 0 || order < 1) throw Error(ErrorCode::InvalidGraph, "piece order must be odd");
  if (g.degree(v) != 3) throw Error(ErrorCode::InvalidGraph, "blown-up vertex must have degree 3");
  if (order == 1) return g;
  MultiGraph piece = random_cubic_3connected(order + 1, seed);
  // piece vertex 0 is dropped; its three neighbours take over the edges at v
  std::vector<VertexId> vs;
  for (VertexId x : g.vertices())
    if (x != v) vs.push_back(x);
  VertexId next_v = g.next_vertex_id();
  EdgeId next_e = g.next_edge_id();
  std::vector<VertexId> map(piece.order(), kNoVertex);
  for (int i = 1; i < piece.order(); ++i) {
    map[i] = next_v++;
    vs.push_back(map[i]);
  }
  std::vector<VertexId> ports;
  for (EdgeId id : piece.incident(0)) ports.push_back(map[piece.edge(id).other(0)]);
  std::vector<Edge> es;
  int port = 0;
  for (const Edge& e : g.edges()) {
    if (e.touches(v)) {
      VertexId other = e.other(v);
      es.push_back({e.id, other, ports[port++]});
    } else {
      es.push_back(e);
    }
  }
  for (const Edge& e : piece.edges())
    if (!e.touches(0)) es.push_back({next_e++, map[e.u], map[e.v]});
  std::sort(vs.begin(), vs.end());
  return MultiGraph(std::move(vs), std::move(es), next_v, next_e);
}

}  // namespace circum
