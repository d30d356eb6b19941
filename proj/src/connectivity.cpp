#include "circum/connectivity.hpp"

#include <algorithm>
#include <functional>

namespace circum {

namespace {

std::vector<char> removed_mask(const MultiGraph& g, std::span<const EdgeId> removed) {
  std::vector<char> mask(g.size(), 0);
  for (EdgeId e : removed) {
    int i = g.edge_index(e);
    if (i >= 0) mask[i] = 1;
  }
  return mask;
}

// Iterative lowpoint search over dense indices; parallel edges count as
// separate edges, so only the tree edge itself is skipped.
void bridge_search(const MultiGraph& g, const std::vector<char>& gone, std::vector<int>& out) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<std::size_t> it(n, 0);
  int timer = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      auto inc = g.incident_indices(x);
      if (it[x] < inc.size()) {
        int ei = inc[it[x]++];
        if (gone[ei] || ei == parent_edge[x]) continue;
        int y = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
        if (disc[y] < 0) {
          disc[y] = low[y] = timer++;
          parent_edge[y] = ei;
          stack.push_back(y);
        } else {
          low[x] = std::min(low[x], disc[y]);
        }
      } else {
        stack.pop_back();
        if (parent_edge[x] >= 0) {
          int ei = parent_edge[x];
          int p = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
          low[p] = std::min(low[p], low[x]);
          if (low[x] > disc[p]) out.push_back(ei);
        }
      }
    }
  }
}

int count_components(const MultiGraph& g, const std::vector<char>& gone) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int ei : g.incident_indices(x)) {
        if (gone[ei]) continue;
        int y = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool is_connected(const MultiGraph& g) {
  return g.order() <= 1 || count_components(g, std::vector<char>(g.size(), 0)) == 1;
}

std::vector<EdgeId> bridges(const MultiGraph& g, std::span<const EdgeId> removed) {
  std::vector<int> idx;
  bridge_search(g, removed_mask(g, removed), idx);
  std::vector<EdgeId> out;
  for (int i : idx) out.push_back(g.edge_at(i).id);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet component(const MultiGraph& g, VertexId start, std::span<const EdgeId> removed) {
  std::vector<char> gone = removed_mask(g, removed);
  std::vector<char> seen(g.order(), 0);
  int s = g.vertex_index(start);
  if (s < 0) throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(start));
  std::vector<int> stack{s};
  seen[s] = 1;
  VertexSet out;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(g.vertex_at(x));
    for (int ei : g.incident_indices(x)) {
      if (gone[ei]) continue;
      int y = g.endpoint_index(ei, 0) == x ? g.endpoint_index(ei, 1) : g.endpoint_index(ei, 0);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool edge_connectivity_at_least(const MultiGraph& g, int k) {
  if (k <= 0) return true;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  std::vector<char> gone(g.size(), 0);
  std::vector<int> br;
  bridge_search(g, gone, br);
  if (!br.empty()) return false;
  if (k == 2) return true;
  if (k == 3) {
    for (int i = 0; i < g.size(); ++i) {
      gone[i] = 1;
      br.clear();
      bridge_search(g, gone, br);
      gone[i] = 0;
      if (!br.empty()) return false;
    }
    return true;
  }
  throw Error(ErrorCode::InternalError, "edge connectivity above 3 is not supported");
}

bool has_parallel_edges(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(g.size());
  for (const Edge& e : g.edges()) ends.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) != ends.end();
}

bool is_theta(const MultiGraph& g) {
  return g.order() == 2 && g.size() == 3;
}

bool is_3_connected(const MultiGraph& g) {
  if (!g.is_cubic()) return false;
  if (is_theta(g)) return true;
  if (g.order() < 4) return false;
  return !has_parallel_edges(g) && edge_connectivity_at_least(g, 3);
}

}  // namespace circum
