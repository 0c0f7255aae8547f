#pragma once

#include <cstddef>
#include <optional>

#include "kuniv/graph.hpp"
#include "kuniv/universality.hpp"

namespace kuniv {

/// A proper (k-1)-tuple and a pattern over its positions with no fresh
/// witness vertex.
struct ExtendibilityDefect {
  Tuple tuple;
  ExtensionPattern pattern;
};

struct ExtendibilityReport {
  bool extendible = false;
  /// Empty when extendible, or when |G| < k (no tuple is to blame).
  std::optional<ExtendibilityDefect> defect;
};

/// k-extendibility in subset form: |G| >= k and every (k-1)-set of vertices
/// realizes all 2^(k-1) adjacency patterns on some fresh vertex.  Quantifying
/// over all tuples makes this equivalent to the prefix form over orderings.
/// Throws InvalidArgument for k = 0.
ExtendibilityReport is_k_extendible(const Graph& g, std::size_t k);

/// Verified k-extendible reference graphs: C5 for k = 2, Paley(29) for k = 3.
/// Throws InvalidArgument for any other k.
Graph reference_extendible(std::size_t k);

}  // namespace kuniv
