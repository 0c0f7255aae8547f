#include "kuniv/theorem3.hpp"

#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

Vertex encode_theorem3(std::size_t k, const Theorem3Vertex& v) {
  return static_cast<Vertex>(((v.part - 1) << k) + v.f);
}

Theorem3Vertex decode_theorem3(std::size_t k, Vertex v) {
  return {static_cast<std::uint32_t>(v & ((1U << k) - 1)), (static_cast<std::size_t>(v) >> k) + 1};
}

std::string theorem3_label(std::size_t k, const Theorem3Vertex& v) {
  std::string bits;
  for (std::size_t j = 1; j <= k; ++j) bits += v.bit(j) ? '1' : '0';
  return "(" + bits + "," + std::to_string(v.part) + ")";
}

Graph theorem3_graph(std::size_t k) {
  if (k < 2 || k > 16) throw InvalidArgument("theorem3 graph needs 2 <= k <= 16, got " + std::to_string(k));
  const std::size_t n = k << k;
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto a = decode_theorem3(k, u);
    labels[u] = theorem3_label(k, a);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto b = decode_theorem3(k, v);
      if (a.part != b.part && a.bit(b.part) == b.bit(a.part)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, std::move(labels));
}

namespace {

bool extend_clique(const Graph& g, const std::vector<Vertex>& candidates, std::size_t from,
                   std::vector<Vertex>& clique, std::size_t size) {
  if (clique.size() == size) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const auto v = candidates[i];
    bool joins = true;
    for (auto u : clique) joins = joins && g.adjacent(u, v);
    if (!joins) continue;
    clique.push_back(v);
    if (extend_clique(g, candidates, i + 1, clique, size)) return true;
    clique.pop_back();
  }
  return false;
}

// exists x3..x_{w+3} distinct from x1, x2 and each other, pairwise adjacent,
// each adjacent to x1 and, depending on the case, adjacent or not to x2.
bool pair_formula_holds(const Graph& g, Vertex x1, Vertex x2, std::size_t w, bool agreeing) {
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == x1 || v == x2) continue;
    if (g.adjacent(x1, v) && g.adjacent(x2, v) == agreeing) candidates.push_back(v);
  }
  std::vector<Vertex> clique;
  return extend_clique(g, candidates, 0, clique, w + 1);
}

// Smallest model of the formula: x1 = 0, x2 = 1, the clique on 2..w+2.
bool pair_formula_satisfiable(std::size_t w, bool agreeing) {
  std::vector<Edge> e;
  const auto top = static_cast<Vertex>(w + 3);
  for (Vertex i = 2; i < top; ++i) {
    e.emplace_back(0, i);
    if (agreeing) e.emplace_back(1, i);
    for (Vertex j = i + 1; j < top; ++j) e.emplace_back(i, j);
  }
  return pair_formula_holds(Graph(top, e), 0, 1, w, agreeing);
}

}  // namespace

PairLemmaReport verify_theorem3_pairs(std::size_t k) {
  if (k < 4) throw InvalidArgument("the pair lemma is stated for k >= 4, got " + std::to_string(k));
  return verify_theorem3_pairs(theorem3_graph(k), k);
}

PairLemmaReport verify_theorem3_pairs(const Graph& g, std::size_t k) {
  if (k < 4 || k > 16) throw InvalidArgument("the pair lemma is checked for 4 <= k <= 16, got " + std::to_string(k));
  if (g.order() != (k << k)) {
    throw InvalidArgument("graph has " + std::to_string(g.order()) + " vertices, expected " +
                          std::to_string(k << k));
  }
  PairLemmaReport report;
  report.k = k;
  const std::uint32_t funcs = 1U << k;
  for (std::size_t l = 1; l <= k; ++l) {
    for (std::uint32_t f1 = 0; f1 < funcs; ++f1) {
      for (std::uint32_t f2 = 0; f2 < funcs; ++f2) {
        if (f1 == f2) continue;
        ++report.pairs_checked;
        std::size_t differ = 0, agree = 0;
        for (std::size_t j = 1; j <= k; ++j) {
          if (j == l) continue;
          (((f1 ^ f2) >> (j - 1)) & 1U ? differ : agree) += 1;
        }
        const bool agreeing = differ > agree;
        const std::size_t w = agreeing ? agree : differ;
        (agreeing ? report.agreeing_case : report.differing_case) += 1;

        auto violation = [&](std::string why) { report.violations.push_back({l, f1, f2, std::move(why)}); };
        if (w + 3 > k) {
          violation("formula needs " + std::to_string(w + 3) + " variables, more than k");
          continue;
        }
        if (!pair_formula_satisfiable(w, agreeing)) {
          violation("formula is unsatisfiable");
          continue;
        }
        const auto x1 = encode_theorem3(k, {f1, l});
        const auto x2 = encode_theorem3(k, {f2, l});
        if (pair_formula_holds(g, x1, x2, w, agreeing)) {
          violation("formula with |w| = " + std::to_string(w) + " holds at the pair");
        }
      }
    }
  }
  return report;
}

}  // namespace kuniv
