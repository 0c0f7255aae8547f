#include "kuniv/coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

WitnessOrdering make_witness(const Graph& g, std::vector<Vertex> ordering) {
  if (ordering.size() != g.order()) {
    throw InvalidArgument("ordering has " + std::to_string(ordering.size()) + " entries for a graph of order " +
                          std::to_string(g.order()));
  }
  std::vector<char> placed(g.order(), 0);
  WitnessOrdering w{std::move(ordering), {}};
  w.back_degrees.reserve(g.order());
  for (auto v : w.ordering) {
    if (v >= g.order() || placed[v]) throw InvalidArgument("ordering is not a permutation of the vertices");
    std::size_t back = 0;
    for (auto u : g.neighbors(v)) back += placed[u] ? 1 : 0;
    placed[v] = 1;
    w.back_degrees.push_back(back);
  }
  return w;
}

bool is_t_witness(const Graph& g, const WitnessOrdering& ord, std::size_t t) {
  auto fresh = make_witness(g, ord.ordering);
  if (fresh.back_degrees != ord.back_degrees) throw InvalidArgument("back degrees disagree with the graph");
  return std::all_of(fresh.back_degrees.begin(), fresh.back_degrees.end(), [t](std::size_t d) { return d <= t; });
}

ColoringResult coloring_number(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order(n);
  std::vector<std::size_t> back(n);
  std::size_t col = 0;
  for (std::size_t slot = n; slot-- > 0;) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    order[slot] = v;
    back[slot] = d;
    col = std::max(col, d);
    for (auto u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  return {col, {std::move(order), std::move(back)}};
}

std::optional<std::vector<Vertex>> uniform_extension(const Graph& g, const VertexSet& a, std::size_t t) {
  if (a.universe() != g.order()) throw InvalidArgument("vertex set belongs to a different graph");
  const std::size_t n = g.order();
  std::vector<char> present(n, 1);  // vertices of A and the not yet peeled rest
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!a.contains(v)) rest.push_back(v);
  }
  std::vector<Vertex> order(rest.size());
  std::vector<char> done(n, 0);
  for (std::size_t slot = rest.size(); slot-- > 0;) {
    std::optional<Vertex> pick;
    for (auto v : rest) {
      if (done[v]) continue;
      std::size_t back = 0;
      for (auto u : g.neighbors(v)) back += present[u] ? 1 : 0;
      if (back <= t) {
        pick = v;
        break;
      }
    }
    if (!pick) return std::nullopt;
    done[*pick] = 1;
    present[*pick] = 0;
    order[slot] = *pick;
  }
  return order;
}

bool extends_uniformly(const Graph& g, const VertexSet& a, std::size_t t) {
  return uniform_extension(g, a, t).has_value();
}

namespace {

bool prefix_is_witness(const Graph& g, const std::vector<Vertex>& seq, std::size_t t) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::size_t back = 0;
    for (std::size_t j = 0; j < i; ++j) back += g.adjacent(seq[j], seq[i]) ? 1 : 0;
    if (back > t) return false;
  }
  return true;
}

}  // namespace

bool leq_t_exact(const Graph& g, const VertexSet& a, std::size_t t, const Budgets& budgets) {
  if (a.universe() != g.order()) throw InvalidArgument("vertex set belongs to a different graph");
  if (g.order() > budgets.brute_force) {
    throw BudgetExceeded("exact <=_t enumeration (vertices)", g.order(), budgets.brute_force);
  }
  if (coloring_number(g).coloring_number > t) return false;

  std::vector<Vertex> head = a.members();
  std::vector<Vertex> tail;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!a.contains(v)) tail.push_back(v);
  }
  std::vector<Vertex> seq;
  do {
    if (!prefix_is_witness(g, head, t)) continue;
    // look for any completion of this witness of A
    std::vector<Vertex> rest = tail;
    bool extended = false;
    do {
      seq = head;
      seq.insert(seq.end(), rest.begin(), rest.end());
      extended = prefix_is_witness(g, seq, t);
    } while (!extended && std::next_permutation(rest.begin(), rest.end()));
    if (!extended) return false;
  } while (std::next_permutation(head.begin(), head.end()));
  return true;
}

}  // namespace kuniv
