#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kuniv {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// A value in N extended by omega (the first infinite ordinal).  Used for
/// distances, tuple ranks and game round bounds.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr explicit ExtendedNat(std::uint64_t value) : value_(value) {}
  static constexpr ExtendedNat omega() { return ExtendedNat(std::nullopt); }

  constexpr bool is_omega() const noexcept { return !value_.has_value(); }
  constexpr std::uint64_t value() const { return value_.value(); }

  constexpr bool operator==(const ExtendedNat&) const = default;
  constexpr std::strong_ordering operator<=>(const ExtendedNat& o) const noexcept {
    if (is_omega() && o.is_omega()) return std::strong_ordering::equal;
    if (is_omega()) return std::strong_ordering::greater;
    if (o.is_omega()) return std::strong_ordering::less;
    return *value_ <=> *o.value_;
  }

  std::string to_string() const { return is_omega() ? "omega" : std::to_string(*value_); }

 private:
  constexpr explicit ExtendedNat(std::nullopt_t) : value_() {}
  std::optional<std::uint64_t> value_{0};
};

/// Finite simple graph on vertices 0..n-1.  Adjacency rows are bit sets so
/// that adjacency tests are O(1) and neighbourhood intersections are word
/// parallel.  Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on an out-of-range endpoint, a self-loop, or a
  /// label vector whose size differs from n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (adj_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  /// Adjacency row of v as packed 64-bit words (bit u set iff u ~ v).
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Empty when the graph carries no labels.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  Graph without_labels() const;

  /// Structural equality: same order and same edge set (labels ignored).
  bool same_structure(const Graph& other) const noexcept {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;
};

/// Builds a graph; the edge list is symmetrized, duplicates are ignored.
Graph new_graph(std::size_t n, std::span<const Edge> edges);

/// Sorted, duplicate-free subset of the vertices of a graph of order n.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws InvalidArgument if some member is >= n.
  VertexSet(std::size_t n, std::vector<Vertex> members);
  static VertexSet all(std::size_t n);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> members_;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Identification of vertices of A with vertices of B (the shared part C).
struct OverlapSpec {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// Throws InvalidArgument if the overlap is not injective in both
/// coordinates or references a missing vertex.
void validate_overlap(const Graph& a, const Graph& b, const OverlapSpec& ov);

bool is_compatible(const Graph& a, const Graph& b, const OverlapSpec& ov);

struct FreeJoin {
  Graph graph;
  /// Position of each vertex of A (identity) and of B in the joined graph.
  std::vector<Vertex> from_a;
  std::vector<Vertex> from_b;
};

/// Vertices of A keep their indices; the unshared vertices of B follow in
/// increasing order.  Throws InvalidArgument on incompatible inputs.
FreeJoin free_join(const Graph& a, const Graph& b, const OverlapSpec& ov);

/// Max shortest-path distance; omega when disconnected; 0 for n <= 1.
ExtendedNat diameter(const Graph& g);

/// Single-source BFS distances; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

}  // namespace kuniv
