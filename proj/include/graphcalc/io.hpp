#pragma once

#include <json.hpp>
#include <span>
#include <string>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

using Json = nlohmann::ordered_json;

/// {"vertices":[{"id","measure","boundary"}],"edges":[{"u","v","a","length"}]}
/// with measure = a = length = 1 and boundary = false when omitted.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);

/// {"values": {id: num}}; every vertex must be given.
VertexValues function_from_json(const WeightedGraph& g, const Json& j);
Json function_to_json(const WeightedGraph& g, std::span<const double> f);

/// Whole file as a string. Throws InputError when it cannot be read.
std::string read_file(const std::string& path);
/// Parses text as JSON, throwing InputError with the parser message.
Json parse_json(const std::string& text);

/// Serializes with fixed key order, doubles as %.17g and non-finite doubles
/// as null, so identical values always give identical bytes.
std::string dump_json(const Json& j, int indent = 2);

/// Finite doubles as numbers, the rest as null.
Json number_or_null(double x);

}  // namespace graphcalc
