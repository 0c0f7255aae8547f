#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kuniv/graph.hpp"

namespace kuniv {

/// A vertex (f, i) of the k-partite construction: f is a binary sequence
/// f(1..k) stored with f(j) at bit j-1, and i in 1..k is its part.
struct Theorem3Vertex {
  std::uint32_t f = 0;
  std::size_t part = 1;

  bool bit(std::size_t j) const noexcept { return (f >> (j - 1)) & 1U; }
};

/// Vertex id (i-1) * 2^k + f.
Vertex encode_theorem3(std::size_t k, const Theorem3Vertex& v);
Theorem3Vertex decode_theorem3(std::size_t k, Vertex v);
/// "(f(1)..f(k),i)", e.g. "(0110,2)".
std::string theorem3_label(std::size_t k, const Theorem3Vertex& v);

/// k parts V_i = {0,1}^k x {i}; (f,i) ~ (g,j) iff i != j and f(j) = g(i).
/// Labelled.  Throws InvalidArgument unless 2 <= k <= 16.
Graph theorem3_graph(std::size_t k);

struct PairLemmaViolation {
  std::size_t part = 0;
  std::uint32_t f1 = 0;
  std::uint32_t f2 = 0;
  std::string reason;
};

struct PairLemmaReport {
  std::size_t k = 0;
  std::size_t pairs_checked = 0;
  /// Pairs per choice of w (differing / agreeing coordinates).
  std::size_t differing_case = 0;
  std::size_t agreeing_case = 0;
  std::vector<PairLemmaViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// For every part l and ordered pair f1 != f2 in V_l, takes w as the
/// smaller of the coordinate sets (outside l) where f1 and f2 differ /
/// agree, and checks that the existential formula
///   exists x3..x_{|w|+3}: all distinct, x3.. a clique, each x_i adjacent to
///   x1 and (differing case) not adjacent / (agreeing case) adjacent to x2
/// fails at ((f1,l),(f2,l)) while being satisfiable, with |w|+3 <= k.
/// Throws InvalidArgument for k < 4.
PairLemmaReport verify_theorem3_pairs(std::size_t k);

/// Same check run on a supplied graph that must use the vertex numbering of
/// theorem3_graph(k) (used to confirm that corrupted graphs are caught).
PairLemmaReport verify_theorem3_pairs(const Graph& g, std::size_t k);

}  // namespace kuniv
