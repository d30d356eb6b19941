#include "circum/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace circum {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

WeightedGraph build(std::vector<std::pair<VertexId, Weight>> vs, std::vector<Edge> es) {
  WeightedGraph out;
  std::vector<VertexId> ids;
  for (auto [v, wt] : vs) {
    if (v < 0) throw Error(ErrorCode::ParseError, "negative vertex id");
    if (wt < 0) throw Error(ErrorCode::ParseError, "negative weight at vertex " + std::to_string(v));
    ids.push_back(v);
    out.weights.set(v, wt);
  }
  for (const Edge& e : es)
    if (e.id < 0) throw Error(ErrorCode::ParseError, "negative edge id");
  std::sort(ids.begin(), ids.end());
  try {
    out.graph = MultiGraph(std::move(ids), std::move(es));
  } catch (const Error& err) {
    throw Error(ErrorCode::ParseError, err.what());
  }
  return out;
}

}  // namespace

WeightedGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  long nv = -1, ne = -1;
  std::vector<std::pair<VertexId, Weight>> vs;
  std::vector<Edge> es;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "graph") {
      if (nv >= 0) parse_fail(line, "second graph header");
      if (!(ls >> nv >> ne) || nv < 0 || ne < 0) parse_fail(line, "bad graph header");
    } else if (word == "vertex") {
      long long id, wt;
      if (!(ls >> id >> wt)) parse_fail(line, "bad vertex line");
      vs.push_back({static_cast<VertexId>(id), wt});
    } else if (word == "edge") {
      long long id, u, v;
      if (!(ls >> id >> u >> v)) parse_fail(line, "bad edge line");
      es.push_back({static_cast<EdgeId>(id), static_cast<VertexId>(u), static_cast<VertexId>(v)});
    } else {
      parse_fail(line, "unknown directive '" + word + "'");
    }
    std::string extra;
    if (ls >> extra) parse_fail(line, "trailing token '" + extra + "'");
  }
  if (nv < 0) throw Error(ErrorCode::ParseError, "missing graph header");
  if (static_cast<long>(vs.size()) != nv) throw Error(ErrorCode::ParseError, "vertex count differs from header");
  if (static_cast<long>(es.size()) != ne) throw Error(ErrorCode::ParseError, "edge count differs from header");
  return build(std::move(vs), std::move(es));
}

std::string to_text(const MultiGraph& g, const WeightMap& w) {
  std::ostringstream os;
  os << "graph " << g.order() << " " << g.size() << "\n";
  for (VertexId v : g.vertices()) os << "vertex " << v << " " << w[v] << "\n";
  for (const Edge& e : g.edges()) os << "edge " << e.id << " " << e.u << " " << e.v << "\n";
  return os.str();
}

WeightedGraph parse_graph_json(const nlohmann::json& j) {
  std::vector<std::pair<VertexId, Weight>> vs;
  std::vector<Edge> es;
  try {
    for (const auto& v : j.at("vertices")) vs.push_back({v.at("id").get<VertexId>(), v.value("weight", Weight{0})});
    for (const auto& e : j.at("edges"))
      es.push_back({e.at("id").get<EdgeId>(), e.at("u").get<VertexId>(), e.at("v").get<VertexId>()});
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  return build(std::move(vs), std::move(es));
}

nlohmann::json to_json(const MultiGraph& g, const WeightMap& w) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  j["edges"] = nlohmann::json::array();
  for (VertexId v : g.vertices()) j["vertices"].push_back({{"id", v}, {"weight", w[v]}});
  for (const Edge& e : g.edges()) j["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  return j;
}

WeightedGraph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::ParseError, ex.what());
    }
    return parse_graph_json(j);
  }
  return parse_graph_text(text);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

nlohmann::json to_json(const DerivationScript& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const Step& st : s.steps) {
    if (auto* c = std::get_if<ContractStep>(&st)) {
      out.push_back({{"op", "contract"}, {"pieces", c->pieces}});
    } else if (auto* p = std::get_if<SuppressStep>(&st)) {
      out.push_back({{"op", "suppress"}, {"edge", p->edge}});
    } else if (auto* m = std::get_if<SmoothStep>(&st)) {
      out.push_back({{"op", "smooth"}, {"vertex", m->vertex}});
    } else if (auto* i = std::get_if<InsertStep>(&st)) {
      out.push_back({{"op", "insert"}, {"ei", i->ei}, {"ej", i->ej}});
    }
  }
  return out;
}

nlohmann::json to_json(const TraceNode& n) {
  nlohmann::json j;
  j["role"] = n.role;
  j["script"] = to_json(n.script);
  j["order"] = n.order;
  j["e"] = n.e;
  j["f"] = n.f;
  j["kind"] = to_string(n.kind);
  j["total"] = n.total;
  j["bound"] = n.bound;
  j["achieved"] = n.achieved;
  j["events"] = nlohmann::json::array();
  for (const TraceEvent& ev : n.events) {
    nlohmann::json e{{"kind", ev.kind}, {"label", ev.label}};
    if (!ev.detail.empty()) e["detail"] = ev.detail;
    if (ev.kind == "candidate") {
      e["weight"] = ev.weight;
      e["winner"] = ev.winner;
    }
    j["events"].push_back(std::move(e));
  }
  j["children"] = nlohmann::json::array();
  for (const TraceNode& c : n.children) j["children"].push_back(to_json(c));
  return j;
}

nlohmann::json to_json(const SolveStats& s) {
  return {{"histogram", s.histogram},
          {"calls", s.calls},
          {"candidate_failures", s.candidate_failures},
          {"max_depth", s.max_depth}};
}

}  // namespace circum
