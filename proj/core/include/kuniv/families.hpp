#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "kuniv/graph.hpp"

namespace kuniv {

Graph clique_graph(std::size_t n);
/// Throws InvalidArgument for n < 3.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(std::size_t leaves);
/// Random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Random forest: each vertex i > 0 attaches to a uniform earlier vertex
/// with probability attach, and starts a new tree otherwise.
Graph random_forest(std::size_t n, double attach, std::uint64_t seed);
/// Vertices Z_q, u ~ v iff u - v is a nonzero square mod q.  Requires a
/// prime q = 1 (mod 4); throws InvalidArgument otherwise.
Graph paley_graph(std::size_t q);

/// Looks a family up by name: clique, cycle, path, empty, star, tree (uses
/// seed), paley (n = q).  n is always the vertex count.
Graph standard_family(std::string_view name, std::size_t n, std::uint64_t seed = 0);

}  // namespace kuniv
