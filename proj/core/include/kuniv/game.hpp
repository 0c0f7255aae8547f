#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kuniv/budget.hpp"
#include "kuniv/graph.hpp"

namespace kuniv {

/// k pebble pairs; slot i is empty or holds (vertex of A, vertex of B).
struct PebblePosition {
  std::vector<std::optional<std::pair<Vertex, Vertex>>> slots;
};

/// True iff the pebbled map is well defined and a partial isomorphism:
/// a_i = a_j <=> b_i = b_j and E_A(a_i, a_j) <=> E_B(b_i, b_j).
bool is_partial_isomorphism(const PebblePosition& pos, const Graph& a, const Graph& b);

enum class Winner { Duplicator, Spoiler };

std::string_view to_string(Winner w);

struct GameVerdict {
  Winner winner = Winner::Duplicator;
  /// Spoiler: the least number of rounds in which he forces a win.
  /// Duplicator: the number of rounds survived (the request; omega for the
  /// eternal game).
  ExtendedNat rounds_bound;
};

/// Solves the existential k-pebble game from A to B.  Finite `rounds`
/// runs that many steps of backward induction; omega iterates the deletion
/// operator to its greatest fixed point.  Positions are partial maps with at
/// most k pairs, so pebble indices never enter the state.
///
/// Throws InvalidArgument for k = 0 and BudgetExceeded when the dense
/// position table would exceed `budgets.game_slots`.
GameVerdict duplicator_wins(const Graph& a, const Graph& b, std::size_t k, ExtendedNat rounds,
                            const Budgets& budgets = current_budgets());

/// A <=^k B: every existential k-variable sentence true in A holds in B.
bool preceq(const Graph& a, const Graph& b, std::size_t k, const Budgets& budgets = current_budgets());

}  // namespace kuniv
