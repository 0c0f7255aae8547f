#include "kuniv/extendibility.hpp"

#include <algorithm>

#include <string>
#include <vector>

#include "kuniv/detail/subsets.hpp"
#include "kuniv/error.hpp"
#include "kuniv/families.hpp"

namespace kuniv {

ExtendibilityReport is_k_extendible(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("extendibility needs k >= 1");
  if (k > 32) throw InvalidArgument("extendibility limited to k <= 32");
  ExtendibilityReport report;
  if (g.order() < k) return report;

  const std::size_t m = k - 1;
  const std::size_t patterns = std::size_t{1} << m;
  std::vector<char> seen(patterns);
  std::optional<ExtendibilityDefect> defect;
  detail::for_each_subset(g.order(), m, [&](const std::vector<Vertex>& s) {
    if (defect) return;
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t distinct = 0;
    std::size_t next_member = 0;
    for (Vertex v = 0; v < g.order() && distinct < patterns; ++v) {
      if (next_member < m && s[next_member] == v) {
        ++next_member;
        continue;
      }
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (g.adjacent(v, s[i])) mask |= std::uint32_t{1} << i;
      }
      if (!seen[mask]) {
        seen[mask] = 1;
        ++distinct;
      }
    }
    if (distinct == patterns) return;
    for (std::size_t p = 0; p < patterns; ++p) {
      if (!seen[p]) {
        defect = ExtendibilityDefect{s, ExtensionPattern{k, static_cast<std::uint32_t>(p)}};
        return;
      }
    }
  });
  report.extendible = !defect;
  report.defect = std::move(defect);
  return report;
}

Graph reference_extendible(std::size_t k) {
  switch (k) {
    case 2:
      return cycle_graph(5);
    case 3:
      return paley_graph(29);
    default:
      throw InvalidArgument("no reference " + std::to_string(k) + "-extendible graph (supported: k = 2, 3)");
  }
}

}  // namespace kuniv
