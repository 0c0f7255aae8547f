#include "kuniv/families.hpp"

#include <string>
#include <vector>

#include "kuniv/error.hpp"
#include "kuniv/random.hpp"
#include "kuniv/sparse.hpp"

namespace kuniv {

Graph clique_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph random_tree(std::size_t n, std::uint64_t seed) { return random_forest(n, 1.0, seed); }

Graph random_forest(std::size_t n, double attach, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    if (rng.bernoulli(attach)) e.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  }
  return Graph(n, e);
}

Graph paley_graph(std::size_t q) {
  if (!is_prime(q) || q % 4 != 1) {
    throw InvalidArgument("Paley graph needs a prime q = 1 mod 4, got " + std::to_string(q));
  }
  std::vector<char> square(q, 0);
  for (std::size_t x = 1; x < q; ++x) square[(x * x) % q] = 1;
  std::vector<Edge> e;
  for (Vertex u = 0; u < q; ++u) {
    for (Vertex v = u + 1; v < q; ++v) {
      if (square[(v - u) % q]) e.emplace_back(u, v);
    }
  }
  return Graph(q, e);
}

Graph standard_family(std::string_view name, std::size_t n, std::uint64_t seed) {
  if (name == "clique") return clique_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "path") return path_graph(n);
  if (name == "empty") return empty_graph(n);
  if (name == "star") {
    if (n == 0) throw InvalidArgument("a star needs at least its centre");
    return star_graph(n - 1);
  }
  if (name == "tree") return random_tree(n, seed);
  if (name == "paley") return paley_graph(n);
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace kuniv
