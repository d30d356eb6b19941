#include "circum/figures.hpp"

#include <algorithm>
#include <functional>

#include "circum/corpus.hpp"
#include "circum/long_cycle.hpp"

namespace circum {

namespace {

constexpr int kSeedTries = 4000;

VertexSet all_of(const MultiGraph& g) { return VertexSet(g.vertices().begin(), g.vertices().end()); }

void spread(WeightMap& w, const VertexSet& vs, Weight x) {
  if (vs.empty()) return;
  const Weight n = static_cast<Weight>(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) w.set(vs[i], x / n + (static_cast<Weight>(i) < x % n ? 1 : 0));
}

struct Shape {
  std::vector<VertexSet> slots;  // weighted and possibly blown-up slots
  VertexSet outside;
};

// Shape of (g, e, f) for the requested figure, or an empty slot list.
using ShapeFn = std::function<Shape(const MultiGraph&, EdgeId, EdgeId)>;

Shape complement(const MultiGraph& g, const CaseDecomposition& cd, Shape s) {
  VertexSet used = make_set(cd.terminals);
  for (const VertexSet& p : cd.pieces) used = set_union(used, p);
  used = set_union(used, set_union(cd.y1, cd.y2));
  s.outside = set_minus(all_of(g), used);
  return s;
}

Shape fig2_shape(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (!applicable_reduction(g, e, f).empty()) return {};
  CaseDecomposition cd = decompose(g, WeightMap{}, e, f);
  if (cd.branch != "L6.case1") return {};
  return complement(g, cd, {cd.pieces, {}});
}

Shape fig3_shape(const MultiGraph& g, EdgeId e, EdgeId f, Fig3Exit exit) {
  if (!applicable_reduction(g, e, f).empty()) return {};
  CaseDecomposition cd = decompose(g, WeightMap{}, e, f);
  if (cd.branch != "L6.case2" || cd.y1.empty()) return {};
  const VertexSet &x1 = cd.pieces[0], &x3 = cd.pieces[2], &x5 = cd.pieces[4];
  const bool shared = x1 == x3;
  if (shared != (exit == Fig3Exit::SharedX1X3) || sets_intersect(cd.y2, x5)) return {};
  if (shared) return complement(g, cd, {{x1, {}, x5, cd.y1, {}}, {}});
  return complement(g, cd, {{x1, x3, x5, cd.y1, cd.y2}, {}});
}

bool matches(const Shape& s, const std::array<int, 5>& orders, int z_order) {
  if (s.slots.empty() || static_cast<int>(s.outside.size()) != z_order) return false;
  for (std::size_t i = 0; i < 5; ++i)
    if (!s.slots[i].empty() && orders[i] > 0 && static_cast<int>(s.slots[i].size()) != orders[i]) return false;
  return true;
}

Instance build(const std::string& name, int base_order, const std::array<Weight, 5>& x,
               const std::array<int, 5>& orders, int z_order, Weight z, std::uint64_t seed, const ShapeFn& shape) {
  if (z_order < 0 || (base_order + z_order) % 2 != 0 || base_order + z_order < 4)
    throw Error(ErrorCode::OddOrder, "no cubic graph of that order");
  std::array<int, 5> ones{};
  for (std::size_t i = 0; i < 5; ++i) ones[i] = orders[i] > 0 ? 1 : 0;
  for (int t = 0; t < kSeedTries; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    MultiGraph r = random_cubic_3connected(base_order + z_order, s);
    for (const Edge& ea : r.edges())
      for (const Edge& eb : r.edges()) {
        if (ea.id >= eb.id || !(eb.touches(ea.u) || eb.touches(ea.v))) continue;
        if (eb.touches(ea.u) && eb.touches(ea.v)) continue;
        Shape sh = shape(r, ea.id, eb.id);
        if (!matches(sh, ones, z_order)) continue;
        MultiGraph g = r;
        for (std::size_t i = 0; i < 5; ++i) {
          if (sh.slots[i].empty() || orders[i] <= 1) continue;
          g = blow_up(g, sh.slots[i].front(), orders[i], s * 8 + i);
        }
        Shape fin = shape(g, ea.id, eb.id);
        if (!matches(fin, orders, z_order)) continue;
        Instance out{name, g, {}, ea.id, eb.id, fin.slots, fin.outside};
        assign_weights(out, x, z);
        return out;
      }
  }
  throw Error(ErrorCode::InternalError, "no graph with the requested shape found");
}

void check_orders(const std::array<int, 5>& orders) {
  for (int o : orders)
    if (o < 1 || o % 2 == 0) throw Error(ErrorCode::InvalidGraph, "piece orders must be odd");
}

}  // namespace

void assign_weights(Instance& in, std::span<const Weight> x, Weight z) {
  in.weights = WeightMap{};
  for (std::size_t i = 0; i < in.slots.size() && i < x.size(); ++i) spread(in.weights, in.slots[i], x[i]);
  spread(in.weights, in.outside, z);
}

Instance fig2_instance(const Fig2Params& p) {
  check_orders(p.orders);
  return build("fig2", 8, p.x, p.orders, p.z_order, p.z, p.seed, fig2_shape);
}

Instance fig3_instance(const Fig3Params& p) {
  check_orders(p.orders);
  std::array<int, 5> orders = p.orders;
  int base = 8;
  if (p.exit == Fig3Exit::SharedX1X3) {
    orders[1] = orders[4] = 0;
    base = 6;
  }
  return build("fig3", base, p.x, orders, p.z_order, p.z, p.seed,
               [exit = p.exit](const MultiGraph& g, EdgeId e, EdgeId f) { return fig3_shape(g, e, f, exit); });
}

Instance branch_instance(const std::string& branch, int n, std::uint64_t seed) {
  const bool adjacent = branch.rfind("L6", 0) == 0;
  for (int t = 0; t < kSeedTries; ++t) {
    MultiGraph g = random_cubic_3connected(n, seed + static_cast<std::uint64_t>(t));
    for (const Edge& ea : g.edges())
      for (const Edge& eb : g.edges()) {
        if (ea.id >= eb.id) continue;
        const bool touch = eb.touches(ea.u) || eb.touches(ea.v);
        if (touch != adjacent || (eb.touches(ea.u) && eb.touches(ea.v))) continue;
        if (!applicable_reduction(g, ea.id, eb.id).empty()) continue;
        CaseDecomposition cd = decompose(g, WeightMap{}, ea.id, eb.id);
        if (cd.branch != branch) continue;
        Shape sh;
        for (const VertexSet& p : cd.pieces)
          if (std::find(sh.slots.begin(), sh.slots.end(), p) == sh.slots.end()) sh.slots.push_back(p);
        sh = complement(g, cd, sh);
        return {branch, g, {}, ea.id, eb.id, sh.slots, sh.outside};
      }
  }
  throw Error(ErrorCode::InternalError, "no graph reaches " + branch);
}

std::vector<Instance> figure_corpus() {
  std::vector<Instance> out;
  auto named = [&](std::string name, Instance in) {
    in.name = std::move(name);
    out.push_back(std::move(in));
  };
  named("fig2.unit", fig2_instance({}));
  named("fig2.C12", fig2_instance({{1, 0, 0, 0, 0}, {5, 5, 1, 5, 1}, 4, 0, 32}));
  named("fig2.C52", fig2_instance({{1, 1, 1, 1, 0}, {5, 1, 3, 5, 1}, 4, 0, 26}));
  named("fig2.C2", fig2_instance({{1, 1, 1, 0, 0}, {5, 5, 1, 5, 1}, 4, 1, 32}));
  named("fig2.Cz", fig2_instance({{1, 1, 1, 0, 1}, {5, 5, 1, 5, 1}, 4, 1, 32}));
  named("fig2.Cy", fig2_instance({{0, 0, 0, 1, 1}, {5, 5, 1, 5, 1}, 4, 2, 32}));
  named("fig3.unit", fig3_instance({}));
  named("fig3.C1", fig3_instance({{1, 0, 0, 0, 0}, {1, 1, 5, 5, 7}, 2, 0, Fig3Exit::None, 3}));
  named("fig3.C2", fig3_instance({{1, 1, 0, 0, 0}, {1, 1, 5, 5, 7}, 2, 0, Fig3Exit::None, 3}));
  named("fig3.Cy", fig3_instance({{2, 1, 1, 0, 0}, {5, 1, 3, 3, 5}, 2, 0, Fig3Exit::None, 13}));
  named("fig3.Cz", fig3_instance({{1, 1, 1, 1, 0}, {5, 5, 7, 1, 1}, 0, 0, Fig3Exit::None, 40}));
  named("fig3.shared", fig3_instance({{1, 1, 1, 1, 1}, {7, 1, 1, 7, 7}, 0, 0, Fig3Exit::SharedX1X3, 27}));
  return out;
}

}  // namespace circum
