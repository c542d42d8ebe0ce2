#pragma once

// JSON and DOT encodings of graphs, families, congruences and homomorphism
// families. Malformed documents raise ParseError.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gtensor/congruence.hpp"
#include "gtensor/graph.hpp"
#include "gtensor/hom_tensor.hpp"

namespace gtensor::io {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [[u, v], ...], "loops_allowed": bool}.
/// A missing "loops_allowed" defaults to whether some edge is a loop.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"index": [...], "factors": {"1": <graph>, ...}, "order": [...], "D": [...]}.
Json family_to_json(const GraphFamily& fam);
GraphFamily family_from_json(const Json& j);

/// {"graph": <graph>, "classes": [[...], ...], "ehat": [[u, v], ...]}.
Json congruence_to_json(const Congruence& c);
Congruence congruence_from_json(const Json& j);

/// {"index": [...], "G": <family>, "H": <family>, "homs": {"1": {"a": "x"}, ...}}.
Json hom_family_to_json(const HomFamily& hf);
HomFamily hom_family_from_json(const Json& j);

/// Parses text; syntax errors carry the byte offset.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// Undirected DOT with quoted vertex names; loops as "a" -- "a".
std::string to_dot(const Graph& g);

}  // namespace gtensor::io
