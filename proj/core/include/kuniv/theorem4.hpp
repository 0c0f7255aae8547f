#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kuniv/budget.hpp"
#include "kuniv/graph.hpp"

namespace kuniv {

/// A vertex (delta, f, m): delta in {0,1}, f a function from
/// {-(k-2)..k-2} to {0,1} (f(x) stored at bit x + k - 2), m the part in
/// 0..n-1.
struct Theorem4Vertex {
  bool delta = false;
  std::uint32_t f = 0;
  std::size_t part = 0;
};

/// The cyclic chain of n parts, each {0,1} x {0,1}^{2k-3}.  For a in V_m and
/// a' in V_m' with d = m - m' (mod n):
///   d = 0 or d in [k, n-k]:  no edge
///   d in [1, k-2]:           edge iff f'(d) = f(-d)
///   d = k-1:                 edge iff delta of a (the higher part) is 1
/// and symmetrically for n - d.  Adjacency is evaluated from the labels on
/// demand, so the graph is never materialized unless asked.
class Theorem4Graph {
 public:
  /// Throws InvalidArgument unless 4 <= k <= 16 and n >= 4k.
  Theorem4Graph(std::size_t k, std::size_t n);

  std::size_t k() const noexcept { return k_; }
  std::size_t parts() const noexcept { return n_; }
  std::size_t part_size() const noexcept { return part_size_; }
  std::size_t order() const noexcept { return n_ * part_size_; }

  Vertex encode(const Theorem4Vertex& v) const;
  Theorem4Vertex decode(Vertex v) const;
  std::size_t part_of(Vertex v) const noexcept { return v / part_size_; }
  std::string label(Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const noexcept;

  /// Only parts within circular distance k-1 can hold neighbours.
  template <typename F>
  void for_each_neighbor(Vertex v, F&& f) const {
    const auto m = part_of(v);
    for (std::size_t step = 1; step < k_; ++step) {
      for (auto other : {(m + step) % n_, (m + n_ - step) % n_}) {
        const auto base = static_cast<Vertex>(other * part_size_);
        for (Vertex u = base; u < base + part_size_; ++u) {
          if (adjacent(v, u)) f(u);
        }
      }
    }
  }

  /// Explicit graph with labels.  Throws BudgetExceeded above
  /// budgets.materialize vertices.
  Graph materialize(const Budgets& budgets = current_budgets()) const;

 private:
  std::size_t k_;
  std::size_t n_;
  std::size_t part_size_;
  std::uint32_t f_bits_;
};

Graph theorem4_graph(std::size_t k, std::size_t n, const Budgets& budgets = current_budgets());

/// Second, independent evaluation of the same edge rule: decodes both
/// endpoints into signed-index functions and applies the one-directional
/// rule in each orientation.
bool theorem4_reference_adjacent(std::size_t k, std::size_t n, Vertex u, Vertex v);

struct Theorem4Options {
  std::size_t audit_pairs = 10'000;
  std::size_t shift_samples = 10'000;
  std::size_t bfs_sources = 4;
};

struct Theorem4Report {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t vertices = 0;
  /// Shift by one part checked on every vertex pair.
  std::uint64_t shift_pairs_exhaustive = 0;
  std::uint64_t shift_violations = 0;
  /// Sampled pairs for every other shift 2..n.
  std::uint64_t shift_pairs_sampled = 0;
  std::uint64_t audit_pairs = 0;
  std::uint64_t audit_mismatches = 0;
  std::uint64_t symmetry_violations = 0;
  std::size_t target_part = 0;
  std::size_t required_distance = 0;
  std::vector<Vertex> bfs_sources;
  /// Distance from each source to the nearest vertex of the target part.
  std::vector<ExtendedNat> bfs_distances;

  bool passed() const;
};

/// Structural checks of the cyclic construction: the part shift is an
/// automorphism, the edge rule agrees with its reference evaluation and is
/// symmetric, and vertices of V_0 are at distance at least
/// ceil(floor((n-1)/2) / (k-1)) from V_{floor((n-1)/2)}.
Theorem4Report verify_theorem4(std::size_t k, std::size_t n, std::uint64_t seed,
                               const Theorem4Options& options = {});

}  // namespace kuniv
