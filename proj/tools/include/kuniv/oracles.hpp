#pragma once

#include <cstddef>
#include <cstdint>

#include "kuniv/graph.hpp"
#include "kuniv/rational.hpp"

// Slow reference implementations used to cross-check the library.
namespace kuniv::oracle {

/// Minimum over all vertex orderings of the largest back degree.
/// Factorial time; n <= 10.
std::size_t brute_force_coloring_number(const Graph& g);

/// Rigidity of B over B & base straight from the definition: every proper
/// intermediate I has (I, B) dense.  n <= 32.
bool rigid_by_definition(const Graph& h, std::uint32_t b_mask, std::uint32_t base_mask, const ExactRational& alpha);

/// Closure by rescanning every set of size <= l in every round.  n <= 20.
VertexSet rescan_closure(const Graph& h, const VertexSet& a, std::size_t l, const ExactRational& alpha);

}  // namespace kuniv::oracle
