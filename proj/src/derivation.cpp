#include "circum/derivation.hpp"

#include <algorithm>
#include <string>

#include "circum/cycle.hpp"

namespace circum {

std::vector<EdgeId> Provenance::parent_path(EdgeId derived) const {
  for (const PathMap& pm : edge_map)
    if (pm.derived == derived) return pm.edges;
  return {derived};
}

VertexSet Provenance::parent_vertices(VertexId derived) const {
  for (const auto& [v, s] : vertex_map)
    if (v == derived) return s;
  return {derived};
}

namespace {

bool piece_connected(const MultiGraph& g, const VertexSet& piece) {
  if (piece.empty()) return false;
  std::vector<VertexId> stack{piece.front()};
  VertexSet seen{piece.front()};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident(x)) {
      VertexId y = g.edge(id).other(x);
      if (set_contains(piece, y) && !set_contains(seen, y)) {
        seen.insert(std::lower_bound(seen.begin(), seen.end(), y), y);
        stack.push_back(y);
      }
    }
  }
  return seen.size() == piece.size();
}

// The two edges at x other than `skip` (one instance of it).
std::pair<EdgeId, EdgeId> other_two(const MultiGraph& g, VertexId x, EdgeId skip) {
  std::vector<EdgeId> out;
  bool skipped = false;
  for (EdgeId id : g.incident(x)) {
    if (id == skip && !skipped) {
      skipped = true;
      continue;
    }
    out.push_back(id);
  }
  if (out.size() != 2)
    throw Error(ErrorCode::InvalidGraph, "vertex " + std::to_string(x) + " is not cubic");
  std::sort(out.begin(), out.end());
  return {out[0], out[1]};
}

}  // namespace

std::pair<MultiGraph, Provenance> contract(const MultiGraph& g, std::span<const VertexSet> pieces) {
  Provenance prov;
  prov.kind = StepKind::Contract;
  std::vector<int> owner(g.order(), -1);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const VertexSet& piece = pieces[p];
    if (piece.empty()) throw Error(ErrorCode::DisconnectedPiece, "empty piece");
    for (VertexId v : piece) {
      int i = g.vertex_index(v);
      if (i < 0) throw Error(ErrorCode::InvalidGraph, "piece vertex " + std::to_string(v) + " not in graph");
      if (owner[i] >= 0) throw Error(ErrorCode::OverlappingPieces, "vertex " + std::to_string(v));
      owner[i] = static_cast<int>(p);
    }
    if (!piece_connected(g, piece))
      throw Error(ErrorCode::DisconnectedPiece, "piece containing " + std::to_string(piece.front()));
  }
  const VertexId base_id = g.next_vertex_id();
  std::vector<VertexId> verts;
  for (int i = 0; i < g.order(); ++i) {
    if (owner[i] < 0) verts.push_back(g.vertex_at(i));
    else prov.removed.push_back(g.vertex_at(i));
  }
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    verts.push_back(base_id + static_cast<VertexId>(p));
    prov.vertex_map.emplace_back(base_id + static_cast<VertexId>(p), pieces[p]);
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) {
    Edge e = g.edge_at(i);
    int ou = owner[g.endpoint_index(i, 0)];
    int ov = owner[g.endpoint_index(i, 1)];
    if (ou >= 0 && ou == ov) {
      prov.dropped.push_back(e.id);
      continue;
    }
    if (ou >= 0) e.u = base_id + ou;
    if (ov >= 0) e.v = base_id + ov;
    edges.push_back(e);
  }
  MultiGraph out(std::move(verts), std::move(edges),
                 base_id + static_cast<VertexId>(pieces.size()), g.next_edge_id());
  return {std::move(out), std::move(prov)};
}

std::pair<MultiGraph, Provenance> suppress_edge(const MultiGraph& g, EdgeId eid) {
  const Edge e = g.edge(eid);
  const VertexId a = e.u;
  const VertexId b = e.v;
  if (g.degree(a) != 3 || g.degree(b) != 3)
    throw Error(ErrorCode::InvalidGraph, "suppression needs cubic endpoints");
  auto [a1, a2] = other_two(g, a, eid);
  auto [b1, b2] = other_two(g, b, eid);
  if (g.edge(a1).other(a) == g.edge(a2).other(a) || g.edge(b1).other(b) == g.edge(b2).other(b))
    throw Error(ErrorCode::ParallelRemainder, "edge " + std::to_string(eid));

  Provenance prov;
  prov.kind = StepKind::Suppress;
  prov.dropped.push_back(eid);
  prov.removed = {std::min(a, b), std::max(a, b)};
  EdgeId next = g.next_edge_id();
  std::vector<Edge> added;

  // A second a-b edge survives the deletion; then a and b merge into one chain.
  EdgeId twin = kNoEdge;
  if (g.edge(a1).other(a) == b) twin = a1;
  if (g.edge(a2).other(a) == b) twin = a2;
  std::vector<EdgeId> gone{eid};
  if (twin == kNoEdge) {
    for (auto [x, p1, p2] : {std::tuple{a, a1, a2}, std::tuple{b, b1, b2}}) {
      Edge m{next++, g.edge(p1).other(x), g.edge(p2).other(x)};
      prov.edge_map.push_back({m.id, {p1, p2}, {x}});
      added.push_back(m);
      gone.push_back(p1);
      gone.push_back(p2);
    }
  } else {
    EdgeId p = (twin == a1) ? a2 : a1;
    EdgeId q = (b1 == twin) ? b2 : b1;
    VertexId x = g.edge(p).other(a);
    VertexId y = g.edge(q).other(b);
    if (x == y) throw Error(ErrorCode::LoopWouldForm, "edge " + std::to_string(eid));
    Edge m{next++, x, y};
    prov.edge_map.push_back({m.id, {p, twin, q}, {a, b}});
    added.push_back(m);
    gone.insert(gone.end(), {p, twin, q});
  }
  std::sort(gone.begin(), gone.end());
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices())
    if (v != a && v != b) verts.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& x : g.edges())
    if (!std::binary_search(gone.begin(), gone.end(), x.id)) edges.push_back(x);
  edges.insert(edges.end(), added.begin(), added.end());
  MultiGraph out(std::move(verts), std::move(edges), g.next_vertex_id(), next);
  return {std::move(out), std::move(prov)};
}

std::pair<MultiGraph, Provenance> smooth_vertex(const MultiGraph& g, VertexId x) {
  auto inc = g.incident(x);
  if (inc.size() != 2) throw Error(ErrorCode::InvalidGraph, "smoothing needs a degree-2 vertex");
  EdgeId p1 = std::min(inc[0], inc[1]);
  EdgeId p2 = std::max(inc[0], inc[1]);
  VertexId y1 = g.edge(p1).other(x);
  VertexId y2 = g.edge(p2).other(x);
  if (y1 == y2) throw Error(ErrorCode::LoopWouldForm, "vertex " + std::to_string(x));
  Provenance prov;
  prov.kind = StepKind::Smooth;
  prov.removed = {x};
  Edge m{g.next_edge_id(), y1, y2};
  prov.edge_map.push_back({m.id, {p1, p2}, {x}});
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices())
    if (v != x) verts.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.id != p1 && e.id != p2) edges.push_back(e);
  edges.push_back(m);
  MultiGraph out(std::move(verts), std::move(edges), g.next_vertex_id(), m.id + 1);
  return {std::move(out), std::move(prov)};
}

std::pair<MultiGraph, Provenance> insert_edge(const MultiGraph& g, EdgeId ei, EdgeId ej,
                                              std::optional<EdgeId> name) {
  if (ei == ej) throw Error(ErrorCode::SameEdge, "edge " + std::to_string(ei));
  const Edge a = g.edge(ei);
  const Edge b = g.edge(ej);
  if (name && (*name < 0 || g.has_edge(*name)))
    throw Error(ErrorCode::InvalidGraph, "edge name " + std::to_string(*name) + " is taken");
  Provenance prov;
  prov.kind = StepKind::Insert;
  const VertexId s1 = g.next_vertex_id();
  const VertexId s2 = s1 + 1;
  EdgeId next = g.next_edge_id();
  if (name && *name >= next) next = *name + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.id != ei && e.id != ej) edges.push_back(e);
  for (auto [old, s] : {std::pair{a, s1}, std::pair{b, s2}}) {
    Edge h1{next++, old.u, s};
    Edge h2{next++, s, old.v};
    prov.edge_map.push_back({h1.id, {old.id}, {}});
    prov.edge_map.push_back({h2.id, {old.id}, {}});
    edges.push_back(h1);
    edges.push_back(h2);
  }
  Edge h{name ? *name : next++, s1, s2};
  edges.push_back(h);
  prov.edge_map.push_back({h.id, {}, {}});
  prov.dropped = {std::min(ei, ej), std::max(ei, ej)};
  prov.vertex_map = {{s1, {}}, {s2, {}}};
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  verts.push_back(s1);
  verts.push_back(s2);
  MultiGraph out(std::move(verts), std::move(edges), s2 + 1, next);
  return {std::move(out), std::move(prov)};
}

Derivation::Derivation(const MultiGraph& base, const WeightMap& w)
    : base_(&base), cur_(base), w_(w) {
  blob_.resize(base.next_vertex_id());
  for (VertexId v : base.vertices()) blob_[v] = {v};
  path_.resize(base.next_edge_id());
  for (const Edge& e : base.edges()) path_[e.id].edges = {e.id};
  reset_owner();
}

void Derivation::reset_owner() {
  owner_.assign(base_->next_edge_id(), kNoEdge);
  for (const Edge& e : cur_.edges())
    for (EdgeId b : path_[e.id].edges)
      if (b < static_cast<EdgeId>(owner_.size())) owner_[b] = e.id;
}

EdgeId Derivation::current_edge(EdgeId base_edge) const {
  if (base_edge < 0 || base_edge >= static_cast<EdgeId>(owner_.size()) || owner_[base_edge] == kNoEdge)
    throw Error(ErrorCode::ForeignEdge, "base edge " + std::to_string(base_edge) + " has no image");
  return owner_[base_edge];
}

VertexId Derivation::current_vertex(VertexId base_vertex) const {
  for (VertexId v : cur_.vertices())
    if (set_contains(blob_[v], base_vertex)) return v;
  return kNoVertex;
}

const VertexSet& Derivation::blob(VertexId current_vertex) const {
  if (!cur_.has_vertex(current_vertex))
    throw Error(ErrorCode::InvalidGraph, "no vertex " + std::to_string(current_vertex));
  return blob_[current_vertex];
}

void Derivation::require_no_insert() const {
  for (const Step& s : script_.steps)
    if (std::holds_alternative<InsertStep>(s))
      throw Error(ErrorCode::UnliftableEdge, "derivation contains an insertion");
}

std::vector<VertexId> Derivation::contract(std::vector<VertexSet> pieces) {
  std::vector<VertexSet> members(pieces.size());
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    pieces[p] = make_set(std::move(pieces[p]));
    for (VertexId v : cur_.vertices())
      if (sets_intersect(blob_[v], pieces[p])) members[p].push_back(v);
    if (members[p].empty())
      throw Error(ErrorCode::DisconnectedPiece, "piece has no current vertex");
  }
  auto [g2, prov] = circum::contract(cur_, members);
  blob_.resize(g2.next_vertex_id());
  std::vector<VertexId> made;
  for (std::size_t p = 0; p < prov.vertex_map.size(); ++p) {
    auto& [nv, set] = prov.vertex_map[p];
    VertexSet b;
    for (VertexId m : set) b = set_union(b, blob_[m]);
    for (EdgeId d : prov.dropped) {
      const Edge& de = cur_.edge(d);
      if (set_contains(set, de.u))
        for (const VertexSet& in : path_[d].inner) b = set_union(b, in);
    }
    blob_[nv] = std::move(b);
    w_.set(nv, 0);
    made.push_back(nv);
  }
  cur_ = std::move(g2);
  script_.steps.push_back(ContractStep{std::move(pieces)});
  reset_owner();
  return made;
}

namespace {

template <class Path>
Path oriented(const Path& p, bool forward) {
  if (forward) return p;
  Path r = p;
  std::reverse(r.edges.begin(), r.edges.end());
  std::reverse(r.inner.begin(), r.inner.end());
  return r;
}

}  // namespace

void Derivation::compose(const Provenance& prov, MultiGraph g2) {
  path_.resize(g2.next_edge_id());
  for (const PathMap& pm : prov.edge_map) {
    BasePath np;
    VertexId at = g2.edge(pm.derived).u;
    for (std::size_t k = 0; k < pm.edges.size(); ++k) {
      const Edge& pe = cur_.edge(pm.edges[k]);
      BasePath piece = oriented(path_[pe.id], pe.u == at);
      if (k > 0) np.inner.push_back(blob_[pm.via[k - 1]]);
      np.edges.insert(np.edges.end(), piece.edges.begin(), piece.edges.end());
      np.inner.insert(np.inner.end(), piece.inner.begin(), piece.inner.end());
      at = pe.other(at);
    }
    path_[pm.derived] = std::move(np);
  }
  cur_ = std::move(g2);
}

void Derivation::suppress(EdgeId base_edge) {
  auto [g2, prov] = suppress_edge(cur_, current_edge(base_edge));
  compose(prov, std::move(g2));
  script_.steps.push_back(SuppressStep{base_edge});
  reset_owner();
}

void Derivation::smooth(VertexId x) {
  auto [g2, prov] = smooth_vertex(cur_, x);
  compose(prov, std::move(g2));
  script_.steps.push_back(SmoothStep{x});
  reset_owner();
}

void Derivation::apply(const Step& s) {
  if (auto* c = std::get_if<ContractStep>(&s)) {
    contract(c->pieces);
  } else if (auto* su = std::get_if<SuppressStep>(&s)) {
    suppress(su->edge);
  } else if (auto* sm = std::get_if<SmoothStep>(&s)) {
    smooth(sm->vertex);
  } else {
    const auto& in = std::get<InsertStep>(s);
    auto [g2, prov] = insert_edge(cur_, current_edge(in.ei), current_edge(in.ej));
    blob_.resize(g2.next_vertex_id());
    path_.resize(g2.next_edge_id());
    for (const auto& [v, set] : prov.vertex_map) blob_[v] = {};
    for (const PathMap& pm : prov.edge_map) path_[pm.derived] = {};
    cur_ = std::move(g2);
    script_.steps.push_back(in);
    reset_owner();
  }
}

ClosedSkeleton Derivation::lift(const Cycle& c) const {
  require_no_insert();
  std::vector<VertexId> vs = cycle_vertices(cur_, c);
  ClosedSkeleton sk;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& ce = cur_.edge(c.edges[i]);
    BasePath p = oriented(path_[ce.id], ce.u == vs[i]);
    sk.steps.push_back({blob_[vs[i]], p.edges.front()});
    for (std::size_t k = 0; k < p.inner.size(); ++k) sk.steps.push_back({p.inner[k], p.edges[k + 1]});
  }
  return sk;
}

MultiGraph replay(const MultiGraph& base, const DerivationScript& script) {
  Derivation d(base, WeightMap{});
  for (const Step& s : script.steps) d.apply(s);
  return d.graph();
}

}  // namespace circum
