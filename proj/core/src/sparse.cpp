#include "kuniv/sparse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "kuniv/detail/subsets.hpp"
#include "kuniv/error.hpp"
#include "kuniv/random.hpp"

namespace kuniv {

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Sparse:
      return "Sparse";
    case PairClass::Dense:
      return "Dense";
    case PairClass::Tie:
      return "Tie";
  }
  return "?";
}

namespace {

void check_alpha(const ExactRational& alpha) {
  if (alpha <= ExactRational(0) || alpha >= ExactRational(1)) {
    throw InvalidArgument("alpha must lie strictly between 0 and 1, got " + alpha.to_string());
  }
}

__extension__ using Wide = __int128;

// Decides e/v against 1/alpha = q/p, i.e. e*p against v*q.
class AlphaComparator {
 public:
  explicit AlphaComparator(const ExactRational& alpha) : alpha_(alpha) {
    check_alpha(alpha);
    auto p = alpha.numerator(), q = alpha.denominator();
    if (p <= INT64_MAX && q <= INT64_MAX) {
      small_ = std::make_pair(p.convert_to<std::int64_t>(), q.convert_to<std::int64_t>());
    }
  }

  PairClass classify(std::uint64_t edges, std::uint64_t vertices) const {
    if (small_) {
      auto lhs = static_cast<Wide>(edges) * small_->first;
      auto rhs = static_cast<Wide>(vertices) * small_->second;
      return lhs < rhs ? PairClass::Sparse : lhs > rhs ? PairClass::Dense : PairClass::Tie;
    }
    ExactRational::Integer lhs = ExactRational::Integer(edges) * alpha_.numerator();
    ExactRational::Integer rhs = ExactRational::Integer(vertices) * alpha_.denominator();
    return lhs < rhs ? PairClass::Sparse : lhs > rhs ? PairClass::Dense : PairClass::Tie;
  }

  const ExactRational& alpha() const { return alpha_; }

 private:
  ExactRational alpha_;
  std::optional<std::pair<std::int64_t, std::int64_t>> small_;
};

[[noreturn]] void throw_tie(std::uint64_t edges, std::uint64_t vertices, const ExactRational& alpha) {
  throw TieError("edge/vertex increment " + std::to_string(edges) + "/" + std::to_string(vertices) +
                 " equals 1/alpha for alpha = " + alpha.to_string() + "; choose an admissible alpha");
}

// The vertices of an extension B - G together with, per vertex, its
// neighbour count in the base G and its adjacency inside the extension.
struct Extension {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> base_degree;
  std::vector<std::uint32_t> inner;  // bit mask over `vertices`

  Extension(const Graph& h, const std::vector<char>& in_base, std::vector<Vertex> ext)
      : vertices(std::move(ext)), base_degree(vertices.size(), 0), inner(vertices.size(), 0) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (auto u : h.neighbors(vertices[i])) {
        if (in_base[u]) ++base_degree[i];
      }
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (h.adjacent(vertices[i], vertices[j])) inner[i] |= std::uint32_t{1} << j;
      }
    }
  }

  Extension(const Graph& h, const std::vector<Vertex>& base, std::vector<Vertex> ext)
      : vertices(std::move(ext)), base_degree(vertices.size(), 0), inner(vertices.size(), 0) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (auto u : base) base_degree[i] += h.adjacent(vertices[i], u) ? 1 : 0;
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (h.adjacent(vertices[i], vertices[j])) inner[i] |= std::uint32_t{1} << j;
      }
    }
  }

  // Calls f(mask, edges inside mask, edges from mask to base) for every
  // nonempty subset of the extension.  Stops early when f returns false.
  template <typename F>
  bool for_each_subset(F&& f) const {
    const std::size_t m = vertices.size();
    const std::uint32_t full = m == 32 ? UINT32_MAX : (std::uint32_t{1} << m) - 1;
    std::vector<std::uint32_t> inside(std::size_t{1} << m, 0), to_base(std::size_t{1} << m, 0);
    for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
      auto low = static_cast<std::size_t>(std::countr_zero(mask));
      auto rest = mask & (mask - 1);
      inside[mask] = inside[rest] + static_cast<std::uint32_t>(std::popcount(inner[low] & rest));
      to_base[mask] = to_base[rest] + base_degree[low];
      if (!f(mask, inside[mask], to_base[mask])) return false;
    }
    return true;
  }
};

// Hard ceiling for the subset tables, whatever the configured budget.
constexpr std::size_t kMaxEnumerated = 24;

std::uint32_t full_mask(std::size_t m) { return m == 32 ? UINT32_MAX : (std::uint32_t{1} << m) - 1; }

// (X := B - I) must be dense for every nonempty X: its incident edges are
// those inside X, from X to the base, and from X to the rest of the extension.
bool rigid_extension(const Extension& ext, const AlphaComparator& cmp) {
  const auto full = full_mask(ext.vertices.size());
  return ext.for_each_subset([&](std::uint32_t mask, std::uint32_t inside, std::uint32_t to_base) {
    std::uint64_t crossing = 0;
    for (auto bits = mask; bits != 0; bits &= bits - 1) {
      crossing += static_cast<std::uint64_t>(std::popcount(ext.inner[std::countr_zero(bits)] & (full & ~mask)));
    }
    const std::uint64_t edges = inside + to_base + crossing;
    const std::uint64_t verts = static_cast<std::uint64_t>(std::popcount(mask));
    auto c = cmp.classify(edges, verts);
    if (c == PairClass::Tie) throw_tie(edges, verts, cmp.alpha());
    return c == PairClass::Dense;
  });
}

bool safe_extension(const Extension& ext, const AlphaComparator& cmp) {
  return ext.for_each_subset([&](std::uint32_t mask, std::uint32_t inside, std::uint32_t to_base) {
    const std::uint64_t edges = inside + to_base;
    const std::uint64_t verts = static_cast<std::uint64_t>(std::popcount(mask));
    auto c = cmp.classify(edges, verts);
    if (c == PairClass::Tie) throw_tie(edges, verts, cmp.alpha());
    return c == PairClass::Sparse;
  });
}

Extension extension_of(const Graph& h, const VertexSet& g, const Budgets& budgets) {
  if (g.universe() != h.order()) throw InvalidArgument("vertex set belongs to a different graph");
  std::vector<char> in_base(h.order(), 0);
  for (auto v : g) in_base[v] = 1;
  std::vector<Vertex> ext;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!in_base[v]) ext.push_back(v);
  }
  const auto limit = std::min(budgets.sparse, kMaxEnumerated);
  if (ext.size() > limit) throw BudgetExceeded("intermediate set enumeration (|H - G|)", ext.size(), limit);
  return Extension(h, in_base, std::move(ext));
}

}  // namespace

PairClass classify_counts(std::uint64_t delta_edges, std::uint64_t delta_vertices, const ExactRational& alpha) {
  if (delta_vertices == 0) throw InvalidArgument("pair has no new vertices; the ratio is undefined");
  return AlphaComparator(alpha).classify(delta_edges, delta_vertices);
}

PairClass classify_pair(const Graph& h, const VertexSet& g, const ExactRational& alpha) {
  if (g.universe() != h.order()) throw InvalidArgument("vertex set belongs to a different graph");
  if (g.size() == h.order()) throw InvalidArgument("G = V(H): the pair has no new vertices");
  std::size_t inner_edges = 0;
  const auto& m = g.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) inner_edges += h.adjacent(m[i], m[j]) ? 1 : 0;
  }
  return classify_counts(h.edge_count() - inner_edges, h.order() - g.size(), alpha);
}

bool is_safe(const Graph& h, const VertexSet& g, const ExactRational& alpha, const Budgets& budgets) {
  AlphaComparator cmp(alpha);
  return safe_extension(extension_of(h, g, budgets), cmp);
}

bool is_rigid(const Graph& h, const VertexSet& g, const ExactRational& alpha, const Budgets& budgets) {
  AlphaComparator cmp(alpha);
  return rigid_extension(extension_of(h, g, budgets), cmp);
}

ClosureResult closure(const Graph& h, const VertexSet& a, std::size_t l, const ExactRational& alpha,
                      const Budgets& budgets) {
  if (a.universe() != h.order()) throw InvalidArgument("vertex set belongs to a different graph");
  const auto limit = std::min(budgets.sparse, kMaxEnumerated);
  if (l > limit) throw BudgetExceeded("closure set size l", l, limit);
  AlphaComparator cmp(alpha);
  const std::size_t n = h.order();

  std::vector<char> in(n, 0), fresh(n, 0);
  for (auto v : a) in[v] = 1;
  ClosureResult result;
  bool first = true;
  while (true) {
    std::vector<Vertex> gained;
    std::vector<char> gained_flag(n, 0);
    for (std::size_t size = 1; size <= std::min(l, n); ++size) {
      detail::for_each_subset(n, size, [&](const std::vector<Vertex>& b) {
        std::vector<Vertex> ext, base;
        bool touches_fresh = first;
        for (auto v : b) {
          (in[v] ? base : ext).push_back(v);
          touches_fresh = touches_fresh || fresh[v];
        }
        if (ext.empty() || !touches_fresh) return;
        // each new vertex needs more than 1/alpha > 1 edges inside B
        for (auto x : ext) {
          std::size_t d = 0;
          for (auto y : b) d += h.adjacent(x, y) ? 1 : 0;
          if (d < 2) return;
        }
        Extension e(h, base, ext);
        if (!rigid_extension(e, cmp)) return;
        result.trace.push_back({result.rounds + 1, b, base});
        for (auto x : ext) {
          if (!gained_flag[x]) {
            gained_flag[x] = 1;
            gained.push_back(x);
          }
        }
      });
    }
    if (gained.empty()) break;
    ++result.rounds;
    std::fill(fresh.begin(), fresh.end(), 0);
    for (auto x : gained) in[x] = fresh[x] = 1;
    first = false;
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) members.push_back(v);
  }
  result.closure = VertexSet(n, std::move(members));
  return result;
}

bool is_l_small(const Graph& h, std::size_t l, const ExactRational& alpha, const Budgets& budgets) {
  const std::size_t n = h.order();
  if (n <= l) return true;
  // closure is monotone in its seed, so seeds of size exactly l suffice
  bool small = false;
  detail::for_each_subset(n, l, [&](const std::vector<Vertex>& g) {
    if (small) return;
    small = closure(h, VertexSet(n, g), l, alpha, budgets).closure.size() == n;
  });
  return small;
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph sample_sparse(std::size_t n, const ExactRational& alpha, std::uint64_t seed) {
  check_alpha(alpha);
  const double p = n == 0 ? 0.0 : std::pow(static_cast<double>(n), -alpha.to_double());
  return sample_gnp(n, p, seed);
}

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t x) {
  std::uint64_t q = x + 1;
  while (!is_prime(q)) ++q;
  return q;
}

ExactRational admissible_alpha(const ExactRational& lo, const ExactRational& hi, std::size_t max_vertices) {
  if (!(lo < hi)) throw InvalidArgument("admissible alpha needs lo < hi");
  auto q = next_prime_above(static_cast<std::uint64_t>(max_vertices) * max_vertices);
  const ExactRational mid = (lo + hi) / ExactRational(2);
  while (true) {
    ExactRational scaled = mid * ExactRational(static_cast<std::int64_t>(q));
    ExactRational candidate(scaled.numerator() / scaled.denominator(), ExactRational::Integer(q));
    if (lo < candidate && candidate < hi && candidate > ExactRational(0) && candidate < ExactRational(1)) {
      return candidate;
    }
    q = next_prime_above(q);
  }
}

bool is_admissible_alpha(const ExactRational& alpha, std::size_t max_vertices) {
  auto q = alpha.denominator();
  if (q > UINT64_MAX) return true;  // exceeds any square of a practical vertex count
  auto qq = q.convert_to<std::uint64_t>();
  return is_prime(qq) && qq > static_cast<std::uint64_t>(max_vertices) * max_vertices;
}

ClosureBoundStats closure_bound_experiment(std::size_t n, const ExactRational& alpha, std::size_t l,
                                           std::size_t trials, std::uint64_t seed, const Budgets& budgets) {
  ClosureBoundStats stats;
  stats.n = n;
  stats.alpha = alpha;
  stats.l = l;
  stats.trials = trials;
  stats.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto trial_seed = derive_seed(seed, t);
    Graph g = sample_sparse(n, alpha, trial_seed);
    Rng pick(derive_seed(trial_seed, 1));
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
    const std::size_t size = std::min(l, n);
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + pick.below(n - i)]);
    }
    pool.resize(size);
    auto c = closure(g, VertexSet(n, pool), l, alpha, budgets);
    stats.sizes.push_back(c.closure.size());
    stats.max_size = std::max(stats.max_size, c.closure.size());
    ++stats.histogram[c.closure.size()];
  }
  return stats;
}

}  // namespace kuniv
