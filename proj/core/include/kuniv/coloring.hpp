#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kuniv/budget.hpp"
#include "kuniv/graph.hpp"

namespace kuniv {

/// An injective enumeration of all vertices together with, for each
/// position, the number of earlier vertices adjacent to it.
struct WitnessOrdering {
  std::vector<Vertex> ordering;
  std::vector<std::size_t> back_degrees;
};

/// Computes back degrees; throws InvalidArgument unless `ordering` is a
/// permutation of the vertices of g.
WitnessOrdering make_witness(const Graph& g, std::vector<Vertex> ordering);

/// True iff every back degree is <= t.  Throws InvalidArgument if the
/// ordering is not a permutation or its back degrees disagree with g.
bool is_t_witness(const Graph& g, const WitnessOrdering& ord, std::size_t t);

struct ColoringResult {
  std::size_t coloring_number = 0;
  WitnessOrdering witness;
};

/// Least t admitting a t-witness.  Computed by peeling a minimum-degree
/// vertex (lowest index on ties) into the last free slot of the ordering.
ColoringResult coloring_number(const Graph& g);

/// An ordering of V(g) - A in which each vertex has at most t neighbours in
/// A and among the earlier vertices, if one exists.  Such an ordering extends
/// every t-witness of A, whatever its order.
std::optional<std::vector<Vertex>> uniform_extension(const Graph& g, const VertexSet& a, std::size_t t);

bool extends_uniformly(const Graph& g, const VertexSet& a, std::size_t t);

/// The extension relation A <=_t G decided from its definition: g has col
/// <= t and every t-witness of the subgraph induced by A extends to a
/// t-witness of g.  Exhaustive over orderings; throws BudgetExceeded when
/// |g| > budgets.brute_force.
bool leq_t_exact(const Graph& g, const VertexSet& a, std::size_t t, const Budgets& budgets = current_budgets());

}  // namespace kuniv
