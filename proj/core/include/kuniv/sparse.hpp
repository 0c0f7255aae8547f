#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "kuniv/budget.hpp"
#include "kuniv/graph.hpp"
#include "kuniv/rational.hpp"

namespace kuniv {

enum class PairClass { Sparse, Dense, Tie };

std::string_view to_string(PairClass c);

/// Compares delta_edges / delta_vertices with 1/alpha exactly.
/// Throws InvalidArgument unless delta_vertices > 0 and 0 < alpha < 1.
PairClass classify_counts(std::uint64_t delta_edges, std::uint64_t delta_vertices, const ExactRational& alpha);

/// Classifies the pair (G, H) for G a proper subset of V(H): new edges over
/// new vertices against 1/alpha.  Throws InvalidArgument when G = V(H).
PairClass classify_pair(const Graph& h, const VertexSet& g, const ExactRational& alpha);

/// Every I with G < I <= H has (G, I) sparse.  Exhaustive over intermediate
/// vertex sets.  Throws BudgetExceeded when |V(H) - G| > budgets.sparse and
/// TieError on an exact tie.
bool is_safe(const Graph& h, const VertexSet& g, const ExactRational& alpha, const Budgets& budgets = current_budgets());

/// Every I with G <= I < H has (I, H) dense.  Same budget and tie rules.
bool is_rigid(const Graph& h, const VertexSet& g, const ExactRational& alpha, const Budgets& budgets = current_budgets());

/// One accepted set of the closure: `added` (|B| <= l) is rigid over
/// `base` = B intersected with the closure of the previous round.
struct ClosureStep {
  std::size_t round = 0;
  std::vector<Vertex> added;
  std::vector<Vertex> base;
};

struct ClosureResult {
  VertexSet closure;
  /// Accepted sets that contributed at least one new vertex, by round.
  std::vector<ClosureStep> trace;
  std::size_t rounds = 0;
};

/// Least fixed point of the rigid-closure operator with set size bound l.
/// Each round adds every B (|B| <= l) that is rigid over its intersection
/// with the closure of the previous round.  After the first round only sets
/// meeting the previous round's new vertices are rescanned.  Throws
/// BudgetExceeded for l > budgets.sparse and TieError on a tie.
ClosureResult closure(const Graph& h, const VertexSet& a, std::size_t l, const ExactRational& alpha,
                      const Budgets& budgets = current_budgets());

/// Some G with |G| <= l has closure(H, G, l) = V(H).
bool is_l_small(const Graph& h, std::size_t l, const ExactRational& alpha, const Budgets& budgets = current_budgets());

/// Every unordered pair is an edge independently with probability p.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// G(n, n^-alpha).
Graph sample_sparse(std::size_t n, const ExactRational& alpha, std::uint64_t seed);

bool is_prime(std::uint64_t q) noexcept;
std::uint64_t next_prime_above(std::uint64_t x);

/// alpha = p/q with q prime and q > max_vertices^2, strictly inside (lo, hi).
/// With such an alpha the ratio of edge and vertex increments of any graph
/// with at most max_vertices vertices can never equal 1/alpha.
ExactRational admissible_alpha(const ExactRational& lo, const ExactRational& hi, std::size_t max_vertices);

bool is_admissible_alpha(const ExactRational& alpha, std::size_t max_vertices);

struct ClosureBoundStats {
  std::size_t n = 0;
  ExactRational alpha;
  std::size_t l = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Closure size of each trial, by trial index.
  std::vector<std::size_t> sizes;
  std::size_t max_size = 0;
  std::map<std::size_t, std::size_t> histogram;
};

/// Samples `trials` graphs G(n, n^-alpha), closes a uniformly random seed
/// set of size min(l, n) in each, and records the closure sizes.
ClosureBoundStats closure_bound_experiment(std::size_t n, const ExactRational& alpha, std::size_t l,
                                           std::size_t trials, std::uint64_t seed,
                                           const Budgets& budgets = current_budgets());

}  // namespace kuniv
