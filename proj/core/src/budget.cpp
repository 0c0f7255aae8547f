#include "kuniv/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {
namespace {

std::size_t parse_count(std::string_view text) {
  // Accept plain integers and the common "1e8" shorthand.
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw InvalidArgument("KUNIV_BUDGET: bad number '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Budgets parse_budgets(std::string_view spec) {
  Budgets b;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      b.sparse = parse_count(item);
      continue;
    }
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "sparse") {
      b.sparse = value;
    } else if (key == "bruteforce") {
      b.brute_force = value;
    } else if (key == "game") {
      b.game_slots = value;
    } else if (key == "materialize") {
      b.materialize = value;
    } else {
      throw InvalidArgument("KUNIV_BUDGET: unknown key '" + std::string(key) + "'");
    }
  }
  return b;
}

Budgets current_budgets() {
  const char* env = std::getenv("KUNIV_BUDGET");
  return env ? parse_budgets(env) : Budgets{};
}

}  // namespace kuniv
