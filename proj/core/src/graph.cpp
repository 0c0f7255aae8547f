#include "kuniv/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), words_((n + 63) / 64), adj_(n * ((n + 63) / 64), 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw InvalidArgument("labels must cover all " + std::to_string(n) + " vertices, got " +
                          std::to_string(labels_.size()));
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    adj_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
  }
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  auto e = edges();
  return Graph(n_, e, std::move(labels));
}

Graph Graph::without_labels() const {
  Graph g = *this;
  g.labels_.clear();
  return g;
}

Graph new_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

VertexSet::VertexSet(std::size_t n, std::vector<Vertex> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n) {
    throw InvalidArgument("vertex " + std::to_string(members_.back()) + " not in a graph of order " +
                          std::to_string(n));
  }
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Vertex>(i);
  return VertexSet(n, std::move(m));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw InvalidArgument("vertex set belongs to a graph of order " + std::to_string(s.universe()) +
                          ", not " + std::to_string(g.order()));
  }
  const auto& m = s.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (auto v : m) labels.push_back(g.labels()[v]);
  }
  return {Graph(m.size(), edges, std::move(labels)), m};
}

void validate_overlap(const Graph& a, const Graph& b, const OverlapSpec& ov) {
  std::vector<char> seen_a(a.order(), 0), seen_b(b.order(), 0);
  for (auto [x, y] : ov.pairs) {
    if (x >= a.order() || y >= b.order()) {
      throw InvalidArgument("overlap pair (" + std::to_string(x) + "," + std::to_string(y) +
                            ") references a missing vertex");
    }
    if (seen_a[x] || seen_b[y]) throw InvalidArgument("overlap is not injective");
    seen_a[x] = seen_b[y] = 1;
  }
}

bool is_compatible(const Graph& a, const Graph& b, const OverlapSpec& ov) {
  validate_overlap(a, b, ov);
  const auto& p = ov.pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (a.adjacent(p[i].first, p[j].first) != b.adjacent(p[i].second, p[j].second)) return false;
    }
  }
  return true;
}

FreeJoin free_join(const Graph& a, const Graph& b, const OverlapSpec& ov) {
  if (!is_compatible(a, b, ov)) {
    throw InvalidArgument("free join needs compatible graphs: the overlap induces different subgraphs");
  }
  FreeJoin out;
  out.from_a.resize(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out.from_a[i] = static_cast<Vertex>(i);
  constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();
  out.from_b.assign(b.order(), kUnset);
  for (auto [x, y] : ov.pairs) out.from_b[y] = x;
  auto next = static_cast<Vertex>(a.order());
  for (auto& slot : out.from_b) {
    if (slot == kUnset) slot = next++;
  }
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(out.from_b[u], out.from_b[v]);

  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels()) {
    labels = a.labels();
    labels.resize(next);
    for (std::size_t y = 0; y < b.order(); ++y) {
      if (out.from_b[y] >= a.order()) labels[out.from_b[y]] = b.labels()[y];
    }
  }
  out.graph = Graph(next, edges, std::move(labels));
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kInf);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

ExtendedNat diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return ExtendedNat::omega();
      best = std::max(best, d);
    }
  }
  return ExtendedNat(best);
}

}  // namespace kuniv
