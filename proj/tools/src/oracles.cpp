#include "kuniv/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "kuniv/error.hpp"

namespace kuniv::oracle {

std::size_t brute_force_coloring_number(const Graph& g) {
  const auto n = g.order();
  if (n > 10) throw InvalidArgument("brute-force coloring number is limited to 10 vertices");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::size_t best = n == 0 ? 0 : n - 1;
  do {
    std::size_t worst = 0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      std::size_t back = 0;
      for (std::size_t j = 0; j < i; ++j) back += g.adjacent(order[i], order[j]) ? 1 : 0;
      worst = std::max(worst, back);
    }
    best = std::min(best, worst);
  } while (best > 0 && std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

std::uint64_t edges_within(const Graph& h, std::uint32_t mask) {
  std::uint64_t e = 0;
  for (auto a = mask; a != 0; a &= a - 1) {
    const auto u = static_cast<Vertex>(std::countr_zero(a));
    for (auto b = a & (a - 1); b != 0; b &= b - 1) {
      e += h.adjacent(u, static_cast<Vertex>(std::countr_zero(b))) ? 1 : 0;
    }
  }
  return e;
}

}  // namespace

bool rigid_by_definition(const Graph& h, std::uint32_t b_mask, std::uint32_t base_mask, const ExactRational& alpha) {
  const auto base = b_mask & base_mask;
  const auto free = b_mask & ~base;
  const auto total = edges_within(h, b_mask);
  const ExactRational inverse = alpha.reciprocal();
  // I = base | sub for every sub strictly inside the free part
  for (std::uint32_t sub = 0;; sub = (sub - free) & free) {
    if (sub != free) {
      const auto i = base | sub;
      const auto de = static_cast<std::int64_t>(total - edges_within(h, i));
      const auto dv = static_cast<std::int64_t>(std::popcount(b_mask) - std::popcount(i));
      const ExactRational ratio(de, dv);
      if (ratio == inverse) throw TieError("tie in the rigidity oracle");
      if (ratio < inverse) return false;
    }
    if (sub == free) break;
  }
  return true;
}

VertexSet rescan_closure(const Graph& h, const VertexSet& a, std::size_t l, const ExactRational& alpha) {
  const auto n = h.order();
  if (n > 20) throw InvalidArgument("rescan closure is limited to 20 vertices");
  std::uint32_t cur = 0;
  for (auto v : a) cur |= std::uint32_t{1} << v;
  while (true) {
    std::uint32_t next = cur;
    for (std::uint32_t b = 1; b < (std::uint32_t{1} << n); ++b) {
      if (static_cast<std::size_t>(std::popcount(b)) > l || (b & ~cur) == 0) continue;
      if (rigid_by_definition(h, b, cur, alpha)) next |= b;
    }
    if (next == cur) break;
    cur = next;
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if ((cur >> v) & 1U) members.push_back(v);
  }
  return VertexSet(n, std::move(members));
}

}  // namespace kuniv::oracle
