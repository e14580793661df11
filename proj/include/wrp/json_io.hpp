// JSON descriptors for groups, actions, elements, presentations, graphs and
// fibre-product specs. Parse errors report the JSON path and the reason.
#pragma once

#include <json.hpp>
#include <string>

#include "wrp/action.hpp"
#include "wrp/fibre.hpp"
#include "wrp/graphprod.hpp"
#include "wrp/presentations.hpp"
#include "wrp/wreath.hpp"

namespace wrp {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& reason);

// descriptors; `arg` may be a builtin name (sym3, d4, c2, z, dinf,
// thompson_f, houghton3, ...), a JSON literal, or a path to a JSON file
GroupSpec parse_group(const Json& j, const std::string& path = "group");
GroupSpec group_from_arg(const std::string& arg);
GroupAction parse_action(const Json& j, const std::string& path = "action");
GroupAction action_from_arg(const std::string& arg);

GroupElement parse_element(const Json& j, const GroupSpec& g, const std::string& path);
Json element_to_json(const GroupElement& e);
Point parse_point(const Json& j, const GroupAction& a, const std::string& path);
Json point_to_json(const Point& p);

WreathElement parse_wreath_element(const Json& j, const WreathProduct& wr,
                                   const std::string& path = "element");
Json wreath_element_to_json(const WreathElement& e);

Word parse_word(const Json& j, const std::string& path);
Json word_to_json(const Word& w);
GroupPresentation parse_presentation(const Json& j, const std::string& path = "presentation");
Json presentation_to_json(const GroupPresentation& p);

VertexGraph parse_graph(const Json& j, const std::string& path = "graph");
Json graph_to_json(const VertexGraph& g);

// {"labels": [...], "classes": [[...]], "graphs": [{"edges": [...]}]}
std::pair<std::vector<VertexGraph>, std::vector<std::vector<int>>> parse_graph_sequence(
    const Json& j, const std::string& path = "sequence");

// {"g1": ..., "g2": ..., "q": ..., "p1": {"gen": <q element>}, "p2": {...}}
FibreProductSpec parse_fibre_spec(const Json& j, size_t budget = 2500,
                                  const std::string& path = "spec");

Json load_json_file(const std::string& file);

}  // namespace wrp
