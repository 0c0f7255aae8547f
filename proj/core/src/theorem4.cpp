#include "kuniv/theorem4.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kuniv/error.hpp"
#include "kuniv/random.hpp"

namespace kuniv {

Theorem4Graph::Theorem4Graph(std::size_t k, std::size_t n)
    : k_(k), n_(n), part_size_(std::size_t{1} << (2 * k - 2)), f_bits_(static_cast<std::uint32_t>(2 * k - 3)) {
  if (k < 4 || k > 16) throw InvalidArgument("cyclic construction needs 4 <= k <= 16, got " + std::to_string(k));
  if (n < 4 * k) {
    throw InvalidArgument("cyclic construction needs n >= 4k = " + std::to_string(4 * k) + ", got " +
                          std::to_string(n));
  }
  if (order() > UINT32_MAX) throw InvalidArgument("cyclic construction too large for 32-bit vertex ids");
}

Vertex Theorem4Graph::encode(const Theorem4Vertex& v) const {
  return static_cast<Vertex>(v.part * part_size_ + (static_cast<std::size_t>(v.delta) << f_bits_) + v.f);
}

Theorem4Vertex Theorem4Graph::decode(Vertex v) const {
  const auto local = static_cast<std::uint32_t>(v % part_size_);
  return {((local >> f_bits_) & 1U) != 0, local & ((1U << f_bits_) - 1), part_of(v)};
}

std::string Theorem4Graph::label(Vertex v) const {
  auto d = decode(v);
  std::string f;
  for (std::uint32_t i = 0; i < f_bits_; ++i) f += ((d.f >> i) & 1U) ? '1' : '0';
  return "(" + std::to_string(d.delta ? 1 : 0) + "," + f + "," + std::to_string(d.part) + ")";
}

bool Theorem4Graph::adjacent(Vertex u, Vertex v) const noexcept {
  const auto shift = static_cast<unsigned>(2 * k_ - 2);
  const std::size_t mu = u >> shift, mv = v >> shift;
  if (mu == mv) return false;
  const std::uint32_t lu = u & static_cast<Vertex>(part_size_ - 1), lv = v & static_cast<Vertex>(part_size_ - 1);
  const std::size_t d = (mu + n_ - mv) % n_;
  const std::size_t centre = k_ - 2;
  auto bit = [](std::uint32_t f, std::size_t i) { return (f >> i) & 1U; };
  // u is in the higher part
  if (d <= k_ - 2) return bit(lv, centre + d) == bit(lu, centre - d);
  if (d == k_ - 1) return (lu >> f_bits_) & 1U;
  const std::size_t e = n_ - d;
  // v is in the higher part
  if (e <= k_ - 2) return bit(lu, centre + e) == bit(lv, centre - e);
  if (e == k_ - 1) return (lv >> f_bits_) & 1U;
  return false;
}

Graph Theorem4Graph::materialize(const Budgets& budgets) const {
  if (order() > budgets.materialize) {
    throw BudgetExceeded("materializing the cyclic construction (vertices)", order(), budgets.materialize);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels(order());
  for (Vertex u = 0; u < order(); ++u) {
    labels[u] = label(u);
    for_each_neighbor(u, [&](Vertex v) {
      if (u < v) edges.emplace_back(u, v);
    });
  }
  return Graph(order(), edges, std::move(labels));
}

Graph theorem4_graph(std::size_t k, std::size_t n, const Budgets& budgets) {
  return Theorem4Graph(k, n).materialize(budgets);
}

namespace {

struct SignedVertex {
  int delta;
  std::vector<int> f;  // f[x + (k-2)] for x in -(k-2)..k-2
  long part;
};

SignedVertex decode_signed(std::size_t k, Vertex v) {
  const std::size_t width = 2 * k - 3;
  const std::size_t per_part = std::size_t{1} << (width + 1);
  SignedVertex s{0, std::vector<int>(width), static_cast<long>(v / per_part)};
  std::size_t local = v % per_part;
  for (std::size_t i = 0; i < width; ++i) s.f[i] = static_cast<int>((local >> i) & 1U);
  s.delta = static_cast<int>(local >> width);
  return s;
}

// The rule read with a in V_m and a' in V_m'; returns false when the
// orientation does not apply (the reverse orientation then decides).
bool directed_rule(long k, long n, const SignedVertex& a, const SignedVertex& ap) {
  const long diff = ((a.part - ap.part) % n + n) % n;
  if (diff == 0) return false;
  if (k <= diff && diff <= n - k) return false;
  auto f_at = [k](const SignedVertex& s, long x) { return s.f[static_cast<std::size_t>(x + (k - 2))]; };
  if (0 < diff && diff < k - 1) return f_at(ap, diff) == f_at(a, -diff);
  if (diff == k - 1) return a.delta == 1;
  return false;
}

}  // namespace

bool theorem4_reference_adjacent(std::size_t k, std::size_t n, Vertex u, Vertex v) {
  const auto a = decode_signed(k, u), b = decode_signed(k, v);
  const auto kk = static_cast<long>(k), nn = static_cast<long>(n);
  return directed_rule(kk, nn, a, b) || directed_rule(kk, nn, b, a);
}

bool Theorem4Report::passed() const {
  if (shift_violations != 0 || audit_mismatches != 0 || symmetry_violations != 0) return false;
  return std::all_of(bfs_distances.begin(), bfs_distances.end(),
                     [&](const ExtendedNat& d) { return d >= ExtendedNat(required_distance); });
}

namespace {

ExtendedNat distance_to_part(const Theorem4Graph& g, Vertex source, std::size_t target) {
  if (g.part_of(source) == target) return ExtendedNat(0);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> frontier{source}, next;
  seen[source] = 1;
  for (std::uint64_t dist = 1; !frontier.empty(); ++dist) {
    next.clear();
    bool hit = false;
    for (auto u : frontier) {
      g.for_each_neighbor(u, [&](Vertex v) {
        if (seen[v]) return;
        seen[v] = 1;
        hit = hit || g.part_of(v) == target;
        next.push_back(v);
      });
      if (hit) return ExtendedNat(dist);
    }
    frontier.swap(next);
  }
  return ExtendedNat::omega();
}

}  // namespace

Theorem4Report verify_theorem4(std::size_t k, std::size_t n, std::uint64_t seed, const Theorem4Options& options) {
  Theorem4Graph g(k, n);
  Theorem4Report r;
  r.k = k;
  r.n = n;
  r.vertices = g.order();
  const auto order = static_cast<Vertex>(g.order());
  const auto ps = static_cast<Vertex>(g.part_size());
  auto shifted = [&](Vertex v, std::size_t l) {
    return static_cast<Vertex>((v + static_cast<std::uint64_t>(l % n) * ps) % order);
  };

  for (Vertex u = 0; u < order; ++u) {
    const auto su = shifted(u, 1);
    for (Vertex v = u + 1; v < order; ++v) {
      ++r.shift_pairs_exhaustive;
      if (g.adjacent(u, v) != g.adjacent(su, shifted(v, 1))) ++r.shift_violations;
    }
  }

  Rng rng(derive_seed(seed, 0));
  for (std::size_t l = 2; l <= n; ++l) {
    for (std::size_t i = 0; i < options.shift_samples; ++i) {
      const auto u = static_cast<Vertex>(rng.below(order)), v = static_cast<Vertex>(rng.below(order));
      ++r.shift_pairs_sampled;
      if (g.adjacent(u, v) != g.adjacent(shifted(u, l), shifted(v, l))) ++r.shift_violations;
    }
  }

  Rng audit(derive_seed(seed, 1));
  for (std::size_t i = 0; i < options.audit_pairs; ++i) {
    // bias half the pairs to nearby parts, where the rule is non-trivial
    const auto u = static_cast<Vertex>(audit.below(order));
    Vertex v = static_cast<Vertex>(audit.below(order));
    if (i % 2 == 0) {
      const auto offset = audit.below(2 * k - 1);  // part offset in -(k-1)..k-1
      const auto part = (g.part_of(u) + n + offset - (k - 1)) % n;
      v = static_cast<Vertex>(part * ps + audit.below(ps));
    }
    ++r.audit_pairs;
    const bool fast = g.adjacent(u, v);
    if (fast != theorem4_reference_adjacent(k, n, u, v)) ++r.audit_mismatches;
    if (fast != g.adjacent(v, u)) ++r.symmetry_violations;
  }

  r.target_part = (n - 1) / 2;
  r.required_distance = (r.target_part + (k - 2)) / (k - 1);
  Rng pick(derive_seed(seed, 2));
  for (std::size_t i = 0; i < options.bfs_sources; ++i) {
    const auto source = static_cast<Vertex>(pick.below(ps));
    r.bfs_sources.push_back(source);
    r.bfs_distances.push_back(distance_to_part(g, source, r.target_part));
  }
  return r;
}

}  // namespace kuniv
