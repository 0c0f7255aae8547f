#include "kuniv/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kuniv/error.hpp"

namespace kuniv {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) {
    json labels = json::object();
    for (std::size_t v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.labels()[v];
    j["labels"] = std::move(labels);
  }
  return j.dump();
}

Graph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n")) throw InvalidArgument("graph JSON: missing \"n\"");
    auto n = j.at("n").get<long long>();
    if (n < 0) throw InvalidArgument("graph JSON: negative vertex count");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("graph JSON: edge must be [u, v]");
        auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0) throw InvalidArgument("graph JSON: negative vertex id");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels.resize(static_cast<std::size_t>(n));
      std::vector<char> seen(labels.size(), 0);
      for (const auto& [key, value] : j.at("labels").items()) {
        std::size_t v = 0;
        try {
          v = std::stoul(key);
        } catch (const std::exception&) {
          throw InvalidArgument("graph JSON: label key '" + key + "' is not a vertex id");
        }
        if (v >= labels.size()) throw InvalidArgument("graph JSON: label for missing vertex " + key);
        labels[v] = value.get<std::string>();
        seen[v] = 1;
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw InvalidArgument("graph JSON: labels must cover every vertex");
      }
    }
    return Graph(static_cast<std::size_t>(n), edges, std::move(labels));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw InvalidArgument("edge list: header must be \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(is >> u >> v) || u < 0 || v < 0) {
      throw InvalidArgument("edge list: expected " + std::to_string(m) + " edges, line " +
                            std::to_string(i + 2) + " is malformed");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (is >> rest) throw InvalidArgument("edge list: trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=" << json(g.labels()[v]).dump() << ']';
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".json") return GraphFormat::Json;
  if (ext == ".dot" || ext == ".gv") return GraphFormat::Dot;
  return GraphFormat::EdgeList;
}

Graph read_graph(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return graph_from_json(text);
  return graph_from_edge_list(text);
}

}  // namespace kuniv
