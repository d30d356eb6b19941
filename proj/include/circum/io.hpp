#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "circum/graph.hpp"
#include "circum/long_cycle.hpp"

namespace circum {

struct WeightedGraph {
  MultiGraph graph;
  WeightMap weights;
};

// graph <nv> <ne> / vertex <id> <weight> / edge <id> <u> <v>, '#' comments.
WeightedGraph parse_graph_text(std::string_view text);
std::string to_text(const MultiGraph& g, const WeightMap& w);

// {"vertices":[{"id":..,"weight":..}], "edges":[{"id":..,"u":..,"v":..}]}
WeightedGraph parse_graph_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiGraph& g, const WeightMap& w);

// Either format, chosen by the first non-blank character.
WeightedGraph parse_graph(std::string_view text);
WeightedGraph load_graph(const std::string& path);

nlohmann::json to_json(const DerivationScript& s);
nlohmann::json to_json(const TraceNode& n);
nlohmann::json to_json(const SolveStats& s);

}  // namespace circum
