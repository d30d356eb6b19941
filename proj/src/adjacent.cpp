#include <algorithm>
#include <array>
#include <sstream>

#include "circum/connectivity.hpp"
#include "circum/cuts.hpp"
#include "solver.hpp"

namespace circum::detail {

namespace {

// Indices 1..5 as in e1..e5, X1..X5.
struct Frame {
  VertexId u1, u2, u3;
  EdgeId e, f;
  std::array<EdgeId, 6> ed{};
  std::array<VertexSet, 6> X;
  std::array<Weight, 6> x{};
};

Frame swap_sides(Frame F) {
  std::swap(F.u1, F.u3);
  std::swap(F.e, F.f);
  for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 4}}) {
    std::swap(F.ed[a], F.ed[b]);
    std::swap(F.X[a], F.X[b]);
    std::swap(F.x[a], F.x[b]);
  }
  return F;
}

Frame flip(Frame F, int a, int b) {
  std::swap(F.ed[a], F.ed[b]);
  std::swap(F.X[a], F.X[b]);
  std::swap(F.x[a], F.x[b]);
  return F;
}

template <class Pred>
std::optional<std::pair<Frame, std::string>> normalize(const Frame& F0, Pred pred) {
  for (int m = 0; m < 8; ++m) {
    Frame F = F0;
    std::string tag;
    if (m & 4) { F = swap_sides(F); tag += " sides"; }
    if (m & 1) { F = flip(F, 1, 2); tag += " 12"; }
    if (m & 2) { F = flip(F, 3, 4); tag += " 34"; }
    if (pred(F)) return std::pair{F, tag.empty() ? std::string("identity") : tag.substr(1)};
  }
  return std::nullopt;
}

std::string weights_detail(const Frame& F) {
  std::ostringstream os;
  os << "x=[" << F.x[1] << "," << F.x[2] << "," << F.x[3] << "," << F.x[4] << "," << F.x[5] << "]";
  return os.str();
}

struct Terminals {
  VertexId u1, u2, u3;
};

Terminals terminals(const MultiGraph& g, EdgeId e, EdgeId f) {
  const Edge& E = g.edge(e);
  const Edge& F = g.edge(f);
  if (E.touches(F.u) && E.touches(F.v)) throw Error(ErrorCode::PreconditionViolated, "e and f are parallel");
  VertexId u2 = E.touches(F.u) ? F.u : F.v;
  return {E.other(u2), u2, F.other(u2)};
}

Frame build_frame(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  Terminals t = terminals(g, e, f);
  Frame F{t.u1, t.u2, t.u3, e, f, {}, {}, {}};
  std::tie(F.ed[1], F.ed[2]) = other_edges(g, t.u1, e);
  std::tie(F.ed[3], F.ed[4]) = other_edges(g, t.u3, f);
  F.ed[5] = third_edge(g, t.u2, e, f);
  const VertexId forb[] = {t.u1, t.u2, t.u3};
  for (int i = 1; i <= 5; ++i) {
    F.X[i] = maximal_3cut_side(g, F.ed[i], forb).side;
    F.x[i] = w.total(F.X[i]);
  }
  return F;
}

VertexSet uset(const Frame& F) { return make_set({F.u1, F.u2, F.u3}); }

}  // namespace

Cycle Solver::adjacent_case(const Level& L) {
  const MultiGraph& g = L.g;
  if (!edge_connectivity_at_least(g, 3))
    throw Error(ErrorCode::PreconditionViolated, "adjacent pair in a graph with a 2-edge cut");
  Terminals t = terminals(g, L.e, L.f);

  if (auto A = reduction_side(g, L.e, L.f)) {
    return reduction(L, "L6.claim1", describe(*A), [&] {
      Derivation d(g, L.w);
      d.contract({*A});
      return descend_realize(L, d, L.e, L.f, "L6.claim1");
    });
  }

  {
    auto [e1, e2] = other_edges(g, t.u1, L.e);
    EdgeId common = kNoEdge;
    for (EdgeId x : {e1, e2})
      if (common == kNoEdge && g.edge(x).touches(t.u3)) common = x;
    if (common != kNoEdge) {
      EdgeId a = common == e1 ? e2 : e1;
      EdgeId b = third_edge(g, t.u3, L.f, common);
      return reduction(L, "L6.claim2", "edge " + std::to_string(common), [&, a, b] {
        Derivation d(g, L.w);
        d.contract({make_set({t.u1, t.u2, t.u3})});
        FillRule tri = fixed_fill(t.u2, {{{t.u1}, {t.u2}, {t.u3}}, {L.e, L.f}}, a, b);
        return descend_realize(L, d, a, b, "L6.claim2", {tri});
      });
    }
  }

  Frame F0 = build_frame(g, L.w, L.e, L.f);
  if (verify()) {
    for (int i = 1; i <= 5; ++i) {
      Derivation d(g, L.w);
      try {
        d.contract({F0.X[i]});
        d.suppress(F0.ed[i]);
      } catch (const Error& err) {
        throw Error(ErrorCode::InternalError, "claim 3 fails for X" + std::to_string(i) + ": " + err.what());
      }
      if (!is_3_connected(d.graph()))
        throw Error(ErrorCode::InternalError, "claim 3 fails for X" + std::to_string(i));
    }
    bump("L6.claim3");
  }
  for (auto [a, b] : {std::pair{1, 2}, std::pair{3, 4}, std::pair{5, 1}, std::pair{5, 2}, std::pair{5, 3},
                      std::pair{5, 4}})
    if (sets_intersect(F0.X[a], F0.X[b]))
      throw Error(ErrorCode::InternalError, "claim 4 fails for X" + std::to_string(a) + ", X" + std::to_string(b));
  bump("L6.claim4");
  for (auto [a, b] : {std::pair{1, 2}, std::pair{3, 4}}) {
    VertexSet both = set_union(F0.X[a], F0.X[b]);
    if (boundary(g, both).size() != 6)
      throw Error(ErrorCode::InternalError, "claim 5 fails for X" + std::to_string(a) + ", X" + std::to_string(b));
  }
  bump("L6.claim5");

  const bool case1 = !sets_intersect(set_union(F0.X[1], F0.X[2]), set_union(F0.X[3], F0.X[4]));
  if (case1) {
    bump("L6.case1");
    auto nf = normalize(F0, [](const Frame& F) {
      return F.x[1] == std::min({F.x[1], F.x[2], F.x[3], F.x[4]}) && F.x[3] <= F.x[4];
    });
    const Frame F = nf->first;
    event(L, "case", "L6.case1", weights_detail(F));
    event(L, "relabel", nf->second);
    Candidates run;
    std::size_t covered = 3;
    for (int i = 1; i <= 5; ++i) covered += F.X[i].size();
    const bool vhs = static_cast<int>(covered) == g.order();
    if (vhs) {
      bump("L6.case1.vhs");
      attempt(L, run, "VHS", [&] {
        Derivation d(g, L.w);
        std::vector<VertexId> v = d.contract({F.X[1], F.X[2], F.X[3], F.X[4], F.X[5]});
        const MultiGraph& h = d.graph();
        int ia = 0, ib = 0;
        EdgeId link = kNoEdge;
        for (auto [a, b] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4}}) {
          auto between = h.edges_between(v[a - 1], v[b - 1]);
          if (link == kNoEdge && !between.empty()) {
            link = between.front();
            ia = a;
            ib = b;
          }
        }
        if (link == kNoEdge) throw Error(ErrorCode::InternalError, "no edge between the two sides of H");
        const VertexSet S = make_set(v);
        Cycle c;
        VertexId at = v[ib - 1];
        EdgeId skip = link;
        for (int step = 0; step < 4; ++step) {
          EdgeId next = kNoEdge;
          for (EdgeId id : h.incident(at))
            if (id != skip && next == kNoEdge && set_contains(S, h.edge(id).other(at)))
              next = id;
          if (next == kNoEdge) throw Error(ErrorCode::InternalError, "H is not a 5-cycle");
          c.edges.push_back(next);
          at = h.edge(next).other(at);
          skip = next;
        }
        if (at != v[ia - 1]) throw Error(ErrorCode::InternalError, "H path does not end at v_a");
        for (EdgeId id : {F.ed[ia], F.e, F.f, F.ed[ib]}) c.edges.push_back(id);
        return realize(L, d.lift(c), {});
      });
      if (run.winner) return conclude(L, run, "L6.case1");
    }

    attempt(L, run, "C12", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[1]});
      d.suppress(F.ed[1]);
      d.contract({F.X[2]});
      return descend_realize(L, d, F.e, F.f, "C12");
    });
    for (int j : {2, 4}) {
      std::string name = "C5" + std::to_string(j);
      attempt(L, run, name, [&] {
        Derivation d(g, L.w);
        d.contract({F.X[5]});
        d.suppress(F.ed[5]);
        d.contract({F.X[j]});
        return descend_realize(L, d, F.e, F.ed[j], name);
      });
    }
    attempt(L, run, "C5", [&] {
      Derivation d(g, L.w);
      d.contract({F.X[5]});
      d.suppress(F.ed[5]);
      return descend_realize(L, d, F.e, boundary_other(g, F.X[5], F.ed[5]), "C5");
    });
    if (run.winner || vhs) return conclude(L, run, "L6.case1");

    attempt(L, run, "Cz", [&] {
      std::string tried;
      for (auto [k, l] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4}}) {
        Derivation d(g, L.w);
        d.contract({F.X[1], F.X[2], F.X[3], F.X[4], F.X[5]});
        try {
          d.suppress(F.ed[5]);
          d.suppress(F.ed[3 - k]);
          d.suppress(F.ed[7 - l]);
        } catch (const Error& err) {
          tried += " (" + std::to_string(k) + "," + std::to_string(l) + "):" + err.what();
          continue;
        }
        if (!is_3_connected(d.graph())) {
          tried += " (" + std::to_string(k) + "," + std::to_string(l) + "):not 3-connected";
          continue;
        }
        int best = 5;
        for (int i : {3 - k, 7 - l})
          if (F.x[i] > F.x[best] || (F.x[i] == F.x[best] && i < best)) best = i;
        event(L, "claim", "Cz", "k=" + std::to_string(k) + " l=" + std::to_string(l) + " i=" + std::to_string(best));
        return descend_realize(L, d, F.e, boundary_other(g, F.X[best], F.ed[best]), "Cz");
      }
      throw Error(ErrorCode::InternalError, "no (k,l) leaves G_z + h 3-connected:" + tried);
    });
    return conclude(L, run, "L6.case1");
  }

  bump("L6.case2");
  auto n2 = normalize(F0, [](const Frame& F) { return F.X[2] == F.X[4]; });
  if (!n2) throw Error(ErrorCode::InternalError, "case 2 without a shared piece");
  Frame F = n2->first;
  event(L, "case", "L6.case2", weights_detail(F));
  event(L, "relabel", n2->second);
  const VertexSet U = uset(F);

  if (F.X[1] == F.X[3]) {
    EdgeId f1 = boundary_other(g, F.X[1], F.ed[1], F.ed[3]);
    EdgeId f2 = boundary_other(g, F.X[2], F.ed[2], F.ed[4]);
    return reduction(L, "L6.case2.exitU1", {}, [&] {
      Derivation d(g, L.w);
      d.contract({set_union(set_union(F.X[1], F.X[2]), U)});
      FillRule fill = fixed_fill(F.u2, {{F.X[1], {F.u1}, {F.u2}, {F.u3}, F.X[2]}, {F.ed[1], F.e, F.f, F.ed[4]}},
                                 f1, f2);
      return descend_realize(L, d, f1, f2, "exitU1", {fill});
    });
  }

  const VertexSet Y1 = F.X[2];
  const EdgeId e6 = boundary_other(g, Y1, F.ed[2], F.ed[4]);
  const VertexSet forb = set_union(Y1, U);
  const VertexSet Y2 = maximal_3cut_side(g, e6, forb).side;
  if (sets_intersect(Y2, set_union(F.X[1], F.X[3])))
    throw Error(ErrorCode::InternalError, "Y2 meets X1 or X3");

  if (sets_intersect(Y2, F.X[5])) {
    EdgeId f1 = boundary_other(g, Y2, F.ed[5], e6);
    return reduction(L, "L6.case2.exitU2", {}, [&] {
      Derivation d(g, L.w);
      d.contract({set_union(set_union(Y1, Y2), U)});
      FillRule fill =
          fixed_fill(F.u2, {{{F.u1}, {F.u2}, {F.u3}, Y1, Y2}, {F.e, F.f, F.ed[4], e6}}, F.ed[1], f1);
      return descend_realize(L, d, F.ed[1], f1, "exitU2", {fill});
    });
  }

  if (F.x[1] > F.x[3]) {
    F = swap_sides(F);
    event(L, "relabel", "sides");
  }
  const VertexSet X1 = F.X[1], X3 = F.X[3], X5 = F.X[5];
  const EdgeId e1 = F.ed[1], e2 = F.ed[2], e3 = F.ed[3], e4 = F.ed[4], e5 = F.ed[5];
  FillRule w_fill = fixed_fill(F.u3, {{{F.u3}, {F.u2}, {F.u1}, Y1}, {F.f, F.e, e2}}, e3, e6);

  Candidates run;
  attempt(L, run, "C1", [&] {
    Derivation d(g, L.w);
    d.contract({X1});
    d.suppress(e1);
    d.contract({set_union(Y1, make_set({F.u2, F.u3})), Y2, X3});
    return descend_realize(L, d, e3, e6, "C1", {w_fill});
  });
  attempt(L, run, "C2", [&] {
    Derivation d(g, L.w);
    d.contract({X5});
    d.suppress(e5);
    d.contract({set_union(Y1, make_set({F.u1, F.u3})), Y2, X3});
    return descend_realize(L, d, e3, e6, "C2", {w_fill});
  });
  attempt(L, run, "Cy", [&] {
    Derivation d(g, L.w);
    d.contract({Y1, Y2});
    d.suppress(e6);
    d.contract({X1, U, X3});
    FillRule tri = fixed_fill(F.u2, {{{F.u1}, {F.u2}, {F.u3}}, {F.e, F.f}}, e1, e3);
    return descend_realize(L, d, e1, e3, "Cy", {tri});
  });
  attempt(L, run, "Cz", [&] {
    Derivation d(g, L.w);
    d.contract({X5});
    d.suppress(e5);
    std::vector<VertexId> v = d.contract({set_union(Y1, make_set({F.u1, F.u3})), X1, X3, Y2});
    const EdgeId e51 = boundary_other(g, X5, e5);
    const std::array<EdgeId, 3> labels{d.current_edge(e1), d.current_edge(e3), d.current_edge(e6)};
    Lemma3Result r = lemma3_cycle(d.graph(), v[0], d.current_edge(e51), labels);
    d.suppress(r.k == 1 ? e1 : e3);
    if (!(d.graph() == r.graph)) throw Error(ErrorCode::InternalError, "suppression replay differs");
    event(L, "claim", "Cz", "k=" + std::to_string(r.k));
    bump("lemma3");
    const VertexId a = F.u1, b = F.u2, c = F.u3;
    const OpenSkeleton via1{{{a}, {b}, {c}, Y1}, {F.e, F.f, e4}};
    const OpenSkeleton via3{{{c}, {b}, {a}, Y1}, {F.f, F.e, e2}};
    FillRule wp{a, [=](EdgeId in, EdgeId out) {
                  if (in == e1 && out == e6) return via1;
                  if (in == e6 && out == e1) return reversed(via1);
                  if (in == e3 && out == e6) return via3;
                  if (in == e6 && out == e3) return reversed(via3);
                  throw Error(ErrorCode::InternalError, "W' passed through unexpected edges");
                }};
    return realize(L, d.lift(r.cycle), {wp});
  });
  return conclude(L, run, "L6.case2");
}

CaseDecomposition decompose_adjacent(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  ZeroedWeights z = zero_terminal_weights(g, w, e, f);
  Frame F = build_frame(g, z.weights, e, f);
  CaseDecomposition cd;
  cd.adjacent = true;
  cd.terminals = {F.u1, F.u2, F.u3};
  VertexSet all = uset(F);
  for (int i = 1; i <= 5; ++i) {
    cd.incident.push_back(F.ed[i]);
    cd.pieces.push_back(F.X[i]);
    cd.piece_weights.push_back(F.x[i]);
    all = set_union(all, F.X[i]);
  }
  cd.z = z.weights.total(set_minus(VertexSet(g.vertices().begin(), g.vertices().end()), all));
  if (!sets_intersect(set_union(F.X[1], F.X[2]), set_union(F.X[3], F.X[4]))) {
    cd.branch = "L6.case1";
    return cd;
  }
  cd.branch = "L6.case2";
  auto n2 = normalize(F, [](const Frame& G) { return G.X[2] == G.X[4]; });
  if (n2) {
    const Frame& G = n2->first;
    for (int i = 1; i <= 5; ++i) {
      cd.incident[i - 1] = G.ed[i];
      cd.pieces[i - 1] = G.X[i];
      cd.piece_weights[i - 1] = G.x[i];
    }
    cd.terminals = {G.u1, G.u2, G.u3};
    cd.y1 = G.X[2];
    EdgeId e6 = boundary_other(g, cd.y1, G.ed[2], G.ed[4]);
    if (!(G.X[1] == G.X[3])) cd.y2 = maximal_3cut_side(g, e6, set_union(cd.y1, uset(G))).side;
  }
  return cd;
}

}  // namespace circum::detail
