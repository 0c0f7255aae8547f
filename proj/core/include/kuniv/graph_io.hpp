#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "kuniv/graph.hpp"

namespace kuniv {

/// {"n": int, "edges": [[u,v],...], "labels": {"vertex": "label"}}.  Output
/// is canonical: edges sorted with u < v, labels keyed by decimal vertex id.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Plain edge list: first line "n m", then m lines "u v".  Labels are not
/// representable and are dropped.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

/// Graphviz DOT (write only).
std::string graph_to_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { Json, EdgeList, Dot };

/// ".json" -> Json, ".dot"/".gv" -> Dot, anything else -> EdgeList.
GraphFormat format_for_path(const std::filesystem::path& path);

/// Reads a graph file; JSON is detected by a leading '{', otherwise the
/// edge-list format is assumed.  Throws InvalidArgument on malformed data.
Graph read_graph(std::string_view text);

}  // namespace kuniv
