#pragma once

#include <cstddef>
#include <string_view>

namespace kuniv {

/// Limits on the exhaustive enumerations.  Defaults may be overridden via the
/// KUNIV_BUDGET environment variable, a comma separated list such as
/// "sparse=20,bruteforce=12,game=100000000,materialize=20000".  A bare
/// integer sets the sparse budget.
struct Budgets {
  /// Max |H - G| for safe/rigid intermediate enumeration (2^n subsets).
  std::size_t sparse = 16;
  /// Max vertex count for the exact <=_t check (factorial enumeration).
  std::size_t brute_force = 10;
  /// Max number of dense position slots allocated by the pebble game solver.
  std::size_t game_slots = 64'000'000;
  /// Max vertex count when materializing a lazily defined construction.
  std::size_t materialize = 8192;
};

/// Parses a KUNIV_BUDGET-style specification on top of the defaults.
/// Throws InvalidArgument on malformed input.
Budgets parse_budgets(std::string_view spec);

/// Defaults overridden by KUNIV_BUDGET when set.
Budgets current_budgets();

}  // namespace kuniv
