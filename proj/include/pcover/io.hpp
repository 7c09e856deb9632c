#pragma once

#include "pcover/graph.hpp"
#include "pcover/packing.hpp"

#include <json.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace pcover {

using Json = nlohmann::ordered_json;

/// {"n", "edges" (u < v), "rotation"}.
Json graph_to_json(const PlanarGraph& g);
/// Missing "rotation" means an embedding is computed.
/// Throws Errc::invalid_argument on malformed documents.
PlanarGraph graph_from_json(const Json& doc);

/// {"centers": [[x, y]], "radii", "outer_face", "residual"}.
Json packing_to_json(const CirclePacking& p);
CirclePacking packing_from_json(const Json& doc);

/// Reads a whole JSON file. Throws Errc::invalid_argument.
Json read_json_file(const std::string& path);
PlanarGraph read_graph_file(const std::string& path);
CirclePacking read_packing_file(const std::string& path);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double x);

/// Parses "1,2,3". Throws Errc::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace pcover
