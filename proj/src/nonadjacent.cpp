#include <algorithm>
#include <array>
#include <sstream>

#include "circum/connectivity.hpp"
#include "circum/cuts.hpp"
#include "solver.hpp"

namespace circum::detail {

namespace {

// u[1..4]; row i holds e_i1, e_i2 and X_i1, X_i2.
struct Frame {
  std::array<VertexId, 5> u{};
  EdgeId e, f;
  std::array<std::array<EdgeId, 3>, 5> ed{};
  std::array<std::array<VertexSet, 3>, 5> X;
  std::array<std::array<Weight, 3>, 5> x{};
};

void swap_rows(Frame& F, int a, int b) {
  std::swap(F.u[a], F.u[b]);
  std::swap(F.ed[a], F.ed[b]);
  std::swap(F.X[a], F.X[b]);
  std::swap(F.x[a], F.x[b]);
}

void flip_row(Frame& F, int i) {
  std::swap(F.ed[i][1], F.ed[i][2]);
  std::swap(F.X[i][1], F.X[i][2]);
  std::swap(F.x[i][1], F.x[i][2]);
}

std::pair<Frame, std::string> relabel(const Frame& F0, int m) {
  Frame F = F0;
  std::string tag;
  if (m & 1) {
    swap_rows(F, 1, 3);
    swap_rows(F, 2, 4);
    std::swap(F.e, F.f);
    tag += " ef";
  }
  if (m & 2) { swap_rows(F, 1, 2); tag += " u1u2"; }
  if (m & 4) { swap_rows(F, 3, 4); tag += " u3u4"; }
  for (int i = 1; i <= 4; ++i)
    if (m & (8 << (i - 1))) {
      flip_row(F, i);
      tag += " flip" + std::to_string(i);
    }
  return {F, tag.empty() ? std::string("identity") : tag.substr(1)};
}

template <class Pred>
std::optional<std::pair<Frame, std::string>> normalize(const Frame& F0, Pred pred) {
  for (int m = 0; m < 128; ++m) {
    auto r = relabel(F0, m);
    if (pred(r.first)) return r;
  }
  return std::nullopt;
}

// Every distinct labeling satisfying pred, in enumeration order.
template <class Pred>
std::vector<std::pair<Frame, std::string>> all_normalizations(const Frame& F0, Pred pred) {
  std::vector<std::pair<Frame, std::string>> out;
  for (int m = 0; m < 128; ++m) {
    auto r = relabel(F0, m);
    if (!pred(r.first)) continue;
    bool seen = false;
    for (const auto& [G, tag] : out) seen = seen || (G.u == r.first.u && G.ed == r.first.ed);
    if (!seen) out.push_back(std::move(r));
  }
  return out;
}

std::string weights_detail(const Frame& F) {
  std::ostringstream os;
  os << "x=[";
  for (int i = 1; i <= 4; ++i) os << (i > 1 ? "," : "") << F.x[i][1] << "," << F.x[i][2];
  os << "]";
  return os.str();
}

Frame build_frame(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  Frame F;
  F.e = e;
  F.f = f;
  const Edge& E = g.edge(e);
  const Edge& Fe = g.edge(f);
  F.u = {kNoVertex, E.u, E.v, Fe.u, Fe.v};
  for (int i = 1; i <= 4; ++i) {
    auto [a, b] = other_edges(g, F.u[i], i <= 2 ? e : f);
    F.ed[i][1] = a;
    F.ed[i][2] = b;
  }
  const VertexId forb[] = {F.u[1], F.u[2], F.u[3], F.u[4]};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 2; ++j) {
      F.X[i][j] = maximal_3cut_side(g, F.ed[i][j], forb).side;
      F.x[i][j] = w.total(F.X[i][j]);
    }
  return F;
}

struct Match {
  int i, j, k, l;
};

std::vector<Match> cross_matches(const Frame& F) {
  std::vector<Match> m;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 3; k <= 4; ++k)
        for (int l = 1; l <= 2; ++l)
          if (sets_intersect(F.X[i][j], F.X[k][l])) m.push_back({i, j, k, l});
  return m;
}

std::vector<EdgeId> skeleton_edges_in(const ClosedSkeleton& sk, const std::vector<EdgeId>& cut) {
  std::vector<EdgeId> r;
  for (const SkeletonStep& s : sk.steps)
    if (std::find(cut.begin(), cut.end(), s.exit) != cut.end()) r.push_back(s.exit);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

Cycle Solver::nonadjacent_case(const Level& L) {
  const MultiGraph& g = L.g;
  const Edge& E = g.edge(L.e);
  const Edge& Fe = g.edge(L.f);
  const VertexSet all(g.vertices().begin(), g.vertices().end());

  if (auto cut = find_2_edge_cut(g)) {
    VertexSet p = cut->side;
    VertexSet q = set_minus(all, p);
    auto inside = [](const VertexSet& s, const Edge& x) { return set_contains(s, x.u) && set_contains(s, x.v); };
    VertexSet A, B;
    if (inside(p, E) && inside(q, Fe)) {
      A = p;
      B = q;
    } else if (inside(q, E) && inside(p, Fe)) {
      A = q;
      B = p;
    } else {
      throw Error(ErrorCode::PreconditionViolated, "a 2-edge cut does not separate e from f");
    }
    const EdgeId g1 = cut->cut_edges[0];
    const std::string detail = "cut " + std::to_string(cut->cut_edges[0]) + "," + std::to_string(cut->cut_edges[1]);
    return reduction(L, "L7.claim1", detail, [&] {
      Derivation d1(g, L.w);
      d1.smooth(d1.contract({B})[0]);
      Derivation d2(g, L.w);
      d2.smooth(d2.contract({A})[0]);
      ClosedSkeleton s1 = descend(L, d1, L.e, g1, "claim1.A");
      ClosedSkeleton s2 = descend(L, d2, g1, L.f, "claim1.B");
      return realize(L, s1, {complement_fill(s2, A.front(), B.front())});
    });
  }

  if (auto A = reduction_side(g, L.e, L.f)) {
    return reduction(L, "L7.claim2", describe(*A), [&] {
      Derivation d(g, L.w);
      d.contract({*A});
      return descend_realize(L, d, L.e, L.f, "L7.claim2");
    });
  }

  {
    VertexId s[] = {E.u, E.v}, t[] = {Fe.u, Fe.v};
    MinCut mc = min_edge_cut(g, s, t, 4);
    if (mc.value == 3) {
      const VertexSet B = mc.sink_side.side;
      const VertexSet A = set_minus(all, B);
      const std::vector<EdgeId> S = mc.sink_side.cut_edges;
      return reduction(L, "L7.claim3", describe(B), [&] {
        Derivation dB(g, L.w);
        dB.contract({B});
        Derivation dA(g, L.w);
        dA.contract({A});
        std::vector<ClosedSkeleton> left;
        std::vector<std::vector<EdgeId>> left_pairs;
        for (EdgeId s_i : S) {
          left.push_back(descend(L, dB, L.e, s_i, "claim3.A"));
          left_pairs.push_back(skeleton_edges_in(left.back(), S));
        }
        for (EdgeId s_j : S) {
          ClosedSkeleton right = descend(L, dA, s_j, L.f, "claim3.B");
          std::vector<EdgeId> pair = skeleton_edges_in(right, S);
          for (std::size_t i = 0; i < left.size(); ++i)
            if (left_pairs[i] == pair) return realize(L, left[i], {complement_fill(right, A.front(), B.front())});
        }
        throw Error(ErrorCode::InternalError, "no matching pair across the 3-edge cut");
      });
    }
  }

  {
    EdgeId common = kNoEdge;
    for (const Edge& h : g.edges()) {
      if (h.id == L.e || h.id == L.f) continue;
      if ((E.touches(h.u) && Fe.touches(h.v)) || (E.touches(h.v) && Fe.touches(h.u))) {
        common = h.id;
        break;
      }
    }
    if (common != kNoEdge) {
      return reduction(L, "L7.claim4", "edge " + std::to_string(common), [&] {
        Derivation d(g, L.w);
        d.suppress(common);
        return descend_realize(L, d, L.e, L.f, "L7.claim4");
      });
    }
  }

  const Frame F0 = build_frame(g, L.w, L.e, L.f);
  if (verify()) {
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 2; ++j) {
        Derivation d(g, L.w);
        try {
          d.contract({F0.X[i][j]});
          d.suppress(F0.ed[i][j]);
        } catch (const Error& err) {
          throw Error(ErrorCode::InternalError, "suppression at X" + std::to_string(i) + std::to_string(j) +
                                                    " fails: " + err.what());
        }
        if (!is_3_connected(d.graph()))
          throw Error(ErrorCode::InternalError,
                      "suppression at X" + std::to_string(i) + std::to_string(j) + " is not 3-connected");
      }
    bump("L7.pieces");
  }
  for (int side : {1, 3}) {
    std::vector<const VertexSet*> xs;
    for (int i = side; i <= side + 1; ++i)
      for (int j = 1; j <= 2; ++j) xs.push_back(&F0.X[i][j]);
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a + 1; b < xs.size(); ++b)
        if (sets_intersect(*xs[a], *xs[b])) throw Error(ErrorCode::InternalError, "claim 5 fails");
  }
  bump("L7.claim5");
  const std::vector<Match> matches = cross_matches(F0);
  for (const Match& m : matches)
    if (!(F0.X[m.i][m.j] == F0.X[m.k][m.l])) throw Error(ErrorCode::InternalError, "claim 6 fails");
  bump("L7.claim6");

  auto c7 = normalize(F0, [](const Frame& F) { return F.X[1][1] == F.X[3][1] && F.X[1][2] == F.X[3][2]; });
  if (c7) {
    const Frame F = c7->first;
    event(L, "relabel", c7->second);
    return reduction(L, "L7.claim7", weights_detail(F), [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1][2], F.X[3][1]});
      d.suppress(F.ed[1][2]);
      d.suppress(F.ed[3][1]);
      return descend_realize(L, d, L.e, L.f, "L7.claim7");
    });
  }

  Candidates run;
  auto claim8 = [](const Frame& F) {
    return F.X[2][1] == F.X[3][1] && F.X[2][2] == F.X[4][1] && F.x[2][1] <= F.x[2][2];
  };
  const auto labelings = all_normalizations(F0, claim8);
  if (!labelings.empty()) {
    bump("L7.claim8");
    event(L, "case", "L7.claim8", weights_detail(labelings.front().first));
    for (const auto& [F, tag] : labelings) {
      if (run.winner) break;
      event(L, "relabel", tag);
      const VertexSet &Y1 = F.X[2][1], &Y2 = F.X[2][2], &X1 = F.X[3][2], &X2 = F.X[4][2];
      attempt(L, run, "Cy", [&] {
        Derivation d(g, L.w);
        d.contract({Y1, Y2});
        d.suppress(F.ed[2][1]);
        d.suppress(F.ed[4][1]);
        d.contract({X2});
        return descend_realize(L, d, F.e, F.f, "Cy");
      });
      attempt(L, run, "Cx", [&] {
        Derivation d(g, L.w);
        d.contract({Y1, Y2});
        d.suppress(F.ed[2][1]);
        d.suppress(F.ed[4][1]);
        d.contract({X2});
        d.contract({X1});
        d.suppress(F.ed[3][2]);
        return descend_realize(L, d, F.e, F.f, "Cx");
      });
      attempt(L, run, "Cx'", [&] {
        Derivation d(g, L.w);
        d.contract({Y2, Y1});
        d.suppress(F.ed[2][2]);
        d.suppress(F.ed[3][1]);
        d.contract({X1});
        d.contract({X2});
        d.suppress(F.ed[4][2]);
        return descend_realize(L, d, F.e, F.f, "Cx'");
      });
    }
    return conclude(L, run, "L7.claim8");
  }

  const int q = static_cast<int>(matches.size());
  if (q == 0) {
    bump("L7.q0");
    auto n = normalize(F0, [](const Frame& F) {
      Weight m = F.x[1][1];
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 2; ++j) m = std::min(m, F.x[i][j]);
      return F.x[1][1] == m;
    });
    const Frame F = n->first;
    event(L, "case", "L7.q0", weights_detail(F));
    event(L, "relabel", n->second);
    attempt(L, run, "Cx", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1][1]});
      d.suppress(F.ed[1][1]);
      d.contract({F.X[1][2]});
      return descend_realize(L, d, L.e, L.f, "Cx");
    });
    return conclude(L, run, "L7.q0");
  }
  if (q == 1) {
    bump("L7.q1");
    auto n = normalize(F0, [](const Frame& F) {
      return F.X[2][2] == F.X[3][2] && F.x[1][1] == std::min({F.x[1][1], F.x[1][2], F.x[4][1], F.x[4][2]});
    });
    if (!n) throw Error(ErrorCode::InternalError, "q = 1 normalization failed");
    const Frame F = n->first;
    event(L, "case", "L7.q1", weights_detail(F));
    event(L, "relabel", n->second);
    attempt(L, run, "Cx", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1][1]});
      d.suppress(F.ed[1][1]);
      d.contract({F.X[1][2]});
      return descend_realize(L, d, L.e, L.f, "Cx");
    });
    if (F.x[2][1] <= F.x[3][1]) {
      attempt(L, run, "Cx'", [&] {
        Derivation d(g, L.w);
        d.contract({F.X[2][1], F.X[3][2]});
        d.suppress(F.ed[2][1]);
        d.suppress(F.ed[3][2]);
        d.contract({F.X[3][1]});
        return descend_realize(L, d, L.e, L.f, "Cx'");
      });
    } else {
      attempt(L, run, "Cx''", [&] {
        Derivation d(g, L.w);
        d.contract({F.X[3][1], F.X[2][2]});
        d.suppress(F.ed[3][1]);
        d.suppress(F.ed[2][2]);
        d.contract({F.X[2][1]});
        return descend_realize(L, d, L.e, L.f, "Cx''");
      });
    }
    attempt(L, run, "Cy", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[2][2]});
      d.suppress(F.ed[2][2]);
      d.contract({F.X[2][1]});
      return descend_realize(L, d, L.e, L.f, "Cy");
    });
    return conclude(L, run, "L7.q1");
  }
  if (q == 2) {
    bump("L7.q2");
    auto n = normalize(F0, [](const Frame& F) {
      return F.X[1][2] == F.X[3][2] && F.X[2][2] == F.X[4][2] &&
             F.x[1][1] == std::min({F.x[1][1], F.x[2][1], F.x[3][1], F.x[4][1]});
    });
    if (!n) throw Error(ErrorCode::InternalError, "q = 2 normalization failed");
    const Frame F = n->first;
    event(L, "case", "L7.q2", weights_detail(F));
    event(L, "relabel", n->second);
    attempt(L, run, "Cx", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1][1], F.X[1][2]});
      d.suppress(F.ed[1][1]);
      d.suppress(F.ed[3][2]);
      d.contract({F.X[3][1]});
      return descend_realize(L, d, L.e, L.f, "Cx");
    });
    attempt(L, run, "Cy", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1][2]});
      d.suppress(F.ed[1][2]);
      d.contract({F.X[1][1]});
      return descend_realize(L, d, L.e, L.f, "Cy");
    });
    return conclude(L, run, "L7.q2");
  }
  throw Error(ErrorCode::InternalError, "more than two shared pieces without claim 7 or 8");
}

CaseDecomposition decompose_nonadjacent(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  ZeroedWeights z = zero_terminal_weights(g, w, e, f);
  const Frame F = build_frame(g, z.weights, e, f);
  CaseDecomposition cd;
  cd.adjacent = false;
  cd.terminals = {F.u[1], F.u[2], F.u[3], F.u[4]};
  VertexSet all = make_set(cd.terminals);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 2; ++j) {
      cd.incident.push_back(F.ed[i][j]);
      cd.pieces.push_back(F.X[i][j]);
      cd.piece_weights.push_back(F.x[i][j]);
      all = set_union(all, F.X[i][j]);
    }
  cd.z = z.weights.total(set_minus(VertexSet(g.vertices().begin(), g.vertices().end()), all));
  cd.q = static_cast<int>(cross_matches(F).size());
  if (normalize(F, [](const Frame& G) { return G.X[1][1] == G.X[3][1] && G.X[1][2] == G.X[3][2]; }))
    cd.branch = "L7.claim7";
  else if (normalize(F, [](const Frame& G) { return G.X[2][1] == G.X[3][1] && G.X[2][2] == G.X[4][1]; }))
    cd.branch = "L7.claim8";
  else
    cd.branch = "L7.q" + std::to_string(cd.q);
  return cd;
}

}  // namespace circum::detail
