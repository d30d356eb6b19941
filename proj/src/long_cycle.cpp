#include <algorithm>
#include <sstream>

#include "circum/connectivity.hpp"
#include "circum/cuts.hpp"
#include "solver.hpp"

namespace circum {

void SolveStats::merge(const SolveStats& other) {
  for (const auto& [k, v] : other.histogram) histogram[k] += v;
  calls += other.calls;
  candidate_failures += other.candidate_failures;
  max_depth = std::max(max_depth, other.max_depth);
  failure_notes.insert(failure_notes.end(), other.failure_notes.begin(), other.failure_notes.end());
}

ZeroedWeights zero_terminal_weights(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  ZeroedWeights z{w, 0};
  for (EdgeId id : {e, f}) {
    const Edge& ed = g.edge(id);
    for (VertexId x : {ed.u, ed.v}) {
      z.removed += z.weights[x];
      z.weights.set(x, 0);
    }
  }
  return z;
}

void check_preconditions(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw Error(ErrorCode::SameEdge, "e and f coincide");
  g.edge(e);
  g.edge(f);
  if (!g.is_cubic()) throw Error(ErrorCode::PreconditionViolated, "graph is not cubic");
  if (!is_connected(g) || !edge_connectivity_at_least(g, 2))
    throw Error(ErrorCode::NotTwoConnected, "graph is not 2-connected");
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    EdgeId a = g.edges()[i].id;
    EdgeId removed[] = {a};
    for (EdgeId b : bridges(g, removed)) {
      if (b < a) continue;
      EdgeId cut[] = {a, b};
      VertexSet side = component(g, g.edge(e).u, cut);
      const Edge& fe = g.edge(f);
      const Edge& ee = g.edge(e);
      bool e_in = set_contains(side, ee.u) && set_contains(side, ee.v);
      bool f_out = !set_contains(side, fe.u) && !set_contains(side, fe.v);
      if (!(e_in && f_out))
        throw Error(ErrorCode::PreconditionViolated,
                    "2-edge cut {" + std::to_string(a) + "," + std::to_string(b) + "} does not separate e from f");
    }
  }
}

namespace detail {

std::string describe(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

OpenSkeleton reversed(OpenSkeleton s) {
  std::reverse(s.blobs.begin(), s.blobs.end());
  std::reverse(s.edges.begin(), s.edges.end());
  return s;
}

FillRule fixed_fill(VertexId rep, OpenSkeleton s, EdgeId in, EdgeId out) {
  return {rep, [s, in, out](EdgeId entry, EdgeId exit) {
            if (entry == in && exit == out) return s;
            if (entry == out && exit == in) return reversed(s);
            throw Error(ErrorCode::InternalError, "blob passed through unexpected edges " +
                                                      std::to_string(entry) + "," + std::to_string(exit));
          }};
}

FillRule complement_fill(const ClosedSkeleton& sk, VertexId other_rep, VertexId rule_rep) {
  const std::size_t k = sk.steps.size();
  std::size_t i = k;
  for (std::size_t j = 0; j < k; ++j)
    if (set_contains(sk.steps[j].blob, other_rep)) i = j;
  if (i == k) throw Error(ErrorCode::InternalError, "cycle misses the contracted side");
  OpenSkeleton os;
  for (std::size_t j = 1; j < k; ++j) {
    std::size_t idx = (i + j) % k;
    os.blobs.push_back(sk.steps[idx].blob);
    if (j + 1 < k) os.edges.push_back(sk.steps[idx].exit);
  }
  return fixed_fill(rule_rep, os, sk.steps[i].exit, sk.steps[(i + k - 1) % k].exit);
}

std::pair<EdgeId, EdgeId> other_edges(const MultiGraph& g, VertexId x, EdgeId skip) {
  std::vector<EdgeId> r;
  for (EdgeId id : g.incident(x))
    if (id != skip) r.push_back(id);
  if (r.size() != 2) throw Error(ErrorCode::InternalError, "vertex is not cubic");
  std::sort(r.begin(), r.end());
  return {r[0], r[1]};
}

EdgeId third_edge(const MultiGraph& g, VertexId x, EdgeId a, EdgeId b) {
  for (EdgeId id : g.incident(x))
    if (id != a && id != b) return id;
  throw Error(ErrorCode::InternalError, "no third edge");
}

EdgeId boundary_other(const MultiGraph& g, const VertexSet& x, EdgeId a, EdgeId b) {
  for (EdgeId id : boundary(g, x))
    if (id != a && id != b) return id;
  throw Error(ErrorCode::InternalError, "no further boundary edge");
}

std::optional<VertexSet> reduction_side(const MultiGraph& g, EdgeId e, EdgeId f) {
  std::optional<VertexSet> best;
  std::vector<EdgeId> best_cut;
  for (EdgeId t : {e, f}) {
    const Edge& o = g.edge(t == e ? f : e);
    for (const CutSide& cs : enumerate_3_edge_cuts(g, t)) {
      if (is_trivial(g, cs)) continue;
      VertexSet p = cs.side;
      VertexSet q = set_minus(VertexSet(g.vertices().begin(), g.vertices().end()), p);
      bool in_p = set_contains(p, o.u) && set_contains(p, o.v);
      bool in_q = set_contains(q, o.u) && set_contains(q, o.v);
      VertexSet a = in_p ? q : in_q ? p : (p.size() <= q.size() ? p : q);
      if (!best || a.size() < best->size() || (a.size() == best->size() && cs.cut_edges < best_cut)) {
        best = a;
        best_cut = cs.cut_edges;
      }
    }
  }
  return best;
}

TraceNode* Solver::child(const Level& L, const std::string& role, const DerivationScript& script) {
  if (!L.node) return nullptr;
  TraceNode& n = L.node->children.emplace_back();
  n.role = role;
  n.script = script;
  return &n;
}

void Solver::event(const Level& L, const std::string& kind, const std::string& label, const std::string& detail) {
  if (!L.node) return;
  L.node->events.push_back({kind, label, detail, 0, 0, false});
}

Cycle Solver::solve(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f, TraceNode* node,
                    int parent_order, int depth) {
  ++stats_.calls;
  stats_.max_depth = std::max(stats_.max_depth, depth);
  if (parent_order >= 0 && g.order() >= parent_order)
    throw Error(ErrorCode::InternalError, "recursive instance is not smaller");
  if (e == f) throw Error(ErrorCode::SameEdge, "e and f coincide");
  g.edge(e);
  g.edge(f);
  if (!g.is_cubic()) throw Error(ErrorCode::PreconditionViolated, "graph is not cubic");
  ZeroedWeights z = zero_terminal_weights(g, w, e, f);
  const bool adj = g.adjacent_edges(e, f);
  const BoundKind kind = adj ? BoundKind::Adjacent : BoundKind::Nonadjacent;
  const Weight total = z.weights.total(g);
  Level L{g, z.weights, e, f, total, kind, bound(kind, total), node, depth};
  if (node) {
    node->order = g.order();
    node->e = e;
    node->f = f;
    node->kind = kind;
    node->total = total;
    node->bound = L.bound;
  }
  Cycle c;
  if (g.order() == 2) {
    bump("base");
    c.edges = {e, f};
  } else if (total == 0) {
    bump("zero");
    c = cycle_through_two_edges(g, e, f);
  } else if (adj) {
    c = adjacent_case(L);
  } else {
    c = nonadjacent_case(L);
  }
  if (!is_valid_cycle(g, c) || !contains_edge(c, e) || !contains_edge(c, f))
    throw Error(ErrorCode::InternalError, "constructed edge set is not a cycle through e and f");
  Weight got = cycle_weight(g, L.w, c);
  if (!meets(got, L.bound))
    throw Error(ErrorCode::InternalBoundMiss, "weight " + std::to_string(got) + " below " + std::to_string(L.bound));
  if (node) node->achieved = got;
  return c;
}

Cycle Solver::realize(const Level& L, const ClosedSkeleton& sk, const std::vector<FillRule>& fills) {
  Cycle c;
  const std::size_t k = sk.steps.size();
  for (std::size_t i = 0; i < k; ++i) {
    EdgeId entry = sk.steps[(i + k - 1) % k].exit;
    expand(L, sk.steps[i].blob, entry, sk.steps[i].exit, fills, c.edges);
    c.edges.push_back(sk.steps[i].exit);
  }
  return c;
}

void Solver::expand(const Level& L, const VertexSet& blob, EdgeId entry, EdgeId exit,
                    const std::vector<FillRule>& fills, std::vector<EdgeId>& out) {
  if (blob.empty()) throw Error(ErrorCode::InternalError, "empty blob");
  if (blob.size() == 1) return;
  for (std::size_t r = 0; r < fills.size(); ++r) {
    if (!set_contains(blob, fills[r].rep)) continue;
    OpenSkeleton s = fills[r].fill(entry, exit);
    std::vector<FillRule> rest;
    for (std::size_t q = 0; q < fills.size(); ++q)
      if (q != r) rest.push_back(fills[q]);
    for (std::size_t k = 0; k < s.blobs.size(); ++k) {
      EdgeId in = k == 0 ? entry : s.edges[k - 1];
      EdgeId to = k + 1 == s.blobs.size() ? exit : s.edges[k];
      expand(L, s.blobs[k], in, to, rest, out);
      if (k + 1 < s.blobs.size()) out.push_back(s.edges[k]);
    }
    return;
  }
  lemma5(L, blob, entry, exit, out);
}

void Solver::lemma5(const Level& L, const VertexSet& x, EdgeId entry, EdgeId exit, std::vector<EdgeId>& out) {
  bump("merge");
  if (boundary(L.g, x).size() != 3)
    throw Error(ErrorCode::InternalError, "piece " + describe(x) + " does not have three boundary edges");
  VertexSet rest = set_minus(VertexSet(L.g.vertices().begin(), L.g.vertices().end()), x);
  std::vector<VertexSet> pieces{rest};
  auto [gx, prov] = contract(L.g, pieces);
  const VertexId o = prov.vertex_map.front().first;
  WeightMap wx = L.w;
  wx.set(o, 0);
  DerivationScript script;
  script.steps.push_back(ContractStep{pieces});
  TraceNode* ch = child(L, "piece", script);
  Cycle sub = solve(gx, wx, entry, exit, ch, L.g.order(), L.depth + 1);
  std::vector<VertexId> vs = cycle_vertices(gx, sub);
  const std::size_t k = sub.edges.size();
  std::size_t p = std::find(sub.edges.begin(), sub.edges.end(), entry) - sub.edges.begin();
  const bool forward = vs[p] == o;
  for (std::size_t i = 1; i < k; ++i) {
    EdgeId ed = sub.edges[forward ? (p + i) % k : (p + k - i) % k];
    if (ed == exit) break;
    out.push_back(ed);
  }
}

ClosedSkeleton Solver::descend(const Level& L, const Derivation& d, EdgeId a, EdgeId b, const std::string& role) {
  EdgeId ca = d.current_edge(a), cb = d.current_edge(b);
  TraceNode* ch = child(L, role, d.script());
  Cycle sub = solve(d.graph(), d.weights(), ca, cb, ch, L.g.order(), L.depth + 1);
  return d.lift(sub);
}

Cycle Solver::descend_realize(const Level& L, const Derivation& d, EdgeId a, EdgeId b, const std::string& role,
                              const std::vector<FillRule>& fills) {
  return realize(L, descend(L, d, a, b, role), fills);
}

bool Solver::attempt(const Level& L, Candidates& run, const std::string& name, const std::function<Cycle()>& build) {
  if (run.winner) return true;
  Cycle c;
  try {
    c = build();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InternalBoundMiss || err.code() == ErrorCode::InternalError) throw;
    ++stats_.candidate_failures;
    stats_.failure_notes.push_back(name + ": " + err.what());
    if (L.node) L.node->events.push_back({"failed", name, err.what(), 0, L.bound, false});
    return false;
  }
  if (!is_valid_cycle(L.g, c) || !contains_edge(c, L.e) || !contains_edge(c, L.f))
    throw Error(ErrorCode::InternalError, "candidate " + name + " is not a cycle through e and f");
  Weight got = cycle_weight(L.g, L.w, c);
  const bool ok = meets(got, L.bound);
  if (L.node) L.node->events.push_back({"candidate", name, {}, got, L.bound, ok});
  if (got > run.best) {
    run.best = got;
    run.best_name = name;
  }
  if (ok) {
    run.winner = std::move(c);
    bump(std::string("win.") + (L.kind == BoundKind::Adjacent ? "L6." : "L7.") + name);
  }
  return ok;
}

Cycle Solver::conclude(const Level&, Candidates& run, const std::string& where) {
  if (run.winner) return *run.winner;
  throw Error(ErrorCode::InternalBoundMiss,
              where + ": no candidate meets the bound (best " + run.best_name + " = " + std::to_string(run.best) + ")");
}

Cycle Solver::reduction(const Level& L, const std::string& label, const std::string& detail,
                        const std::function<Cycle()>& build) {
  bump(label);
  if (L.node) L.node->events.push_back({"reduction", label, detail, 0, L.bound, false});
  Cycle c = build();
  Weight got = cycle_weight(L.g, L.w, c);
  if (!meets(got, L.bound))
    throw Error(ErrorCode::InternalBoundMiss, label + ": reduction gave " + std::to_string(got));
  return c;
}

}  // namespace detail

CycleResult long_cycle(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f, const LongCycleOptions& opt) {
  if (opt.check_preconditions) check_preconditions(g, e, f);
  CycleResult res;
  detail::Solver s(opt, res.stats);
  res.trace.role = "root";
  res.cycle = s.solve(g, w, e, f, opt.record_trace ? &res.trace : nullptr, -1, 0);
  res.weight = cycle_weight(g, w, res.cycle);
  res.kind = g.adjacent_edges(e, f) ? BoundKind::Adjacent : BoundKind::Nonadjacent;
  res.bound = bound(res.kind, w.total(g));
  if (!meets(res.weight, res.bound))
    throw Error(ErrorCode::InternalBoundMiss, "weight " + std::to_string(res.weight) + " below " + std::to_string(res.bound));
  return res;
}

Cycle merge_contracted(const Derivation& d, const WeightMap& w, const Cycle& c, const LongCycleOptions& opt) {
  SolveStats stats;
  detail::Solver s(opt, stats);
  const MultiGraph& g = d.base();
  detail::Level L{g, w, kNoEdge, kNoEdge, w.total(g), BoundKind::Adjacent, 0, nullptr, 0};
  return s.realize(L, d.lift(c), {});
}

std::string applicable_reduction(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (g.order() == 2) return {};
  if (g.adjacent_edges(e, f)) {
    if (detail::reduction_side(g, e, f)) return "L6.claim1";
    const Edge& E = g.edge(e);
    const Edge& F = g.edge(f);
    VertexId u2 = E.touches(F.u) ? F.u : F.v;
    VertexId u1 = E.other(u2), u3 = F.other(u2);
    auto [e1, e2] = detail::other_edges(g, u1, e);
    for (EdgeId x : {e1, e2})
      if (g.edge(x).touches(u3)) return "L6.claim2";
    return {};
  }
  if (find_2_edge_cut(g)) return "L7.claim1";
  if (detail::reduction_side(g, e, f)) return "L7.claim2";
  const Edge& E = g.edge(e);
  const Edge& F = g.edge(f);
  VertexId s[] = {E.u, E.v}, t[] = {F.u, F.v};
  if (min_edge_cut(g, s, t, 4).value == 3) return "L7.claim3";
  for (const Edge& h : g.edges()) {
    if (h.id == e || h.id == f) continue;
    if ((E.touches(h.u) && F.touches(h.v)) || (E.touches(h.v) && F.touches(h.u))) return "L7.claim4";
  }
  return {};
}

CaseDecomposition decompose(const MultiGraph& g, const WeightMap& w, EdgeId e, EdgeId f) {
  if (!applicable_reduction(g, e, f).empty())
    throw Error(ErrorCode::PreconditionViolated, "a reduction applies");
  return g.adjacent_edges(e, f) ? detail::decompose_adjacent(g, w, e, f) : detail::decompose_nonadjacent(g, w, e, f);
}

}  // namespace circum
