#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kuniv/graph.hpp"
#include "kuniv/random.hpp"
#include "kuniv/sparse.hpp"

namespace kuniv::test {

inline Graph random_graph(Rng& rng, std::size_t max_n, std::size_t min_n = 1) {
  const auto n = min_n + rng.below(max_n - min_n + 1);
  const double ps[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  return sample_gnp(n, ps[rng.below(5)], rng.next());
}

inline std::vector<Vertex> random_subset(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

/// Brute-force isomorphism test, n <= 9.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.order() && ok; ++u) {
      for (Vertex v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every graph on n vertices, by edge mask over the pairs u < v.
template <typename F>
void for_each_graph(std::size_t n, F&& f) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) e.push_back(pairs[i]);
    }
    f(Graph(n, e));
  }
}

}  // namespace kuniv::test
