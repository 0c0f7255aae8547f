#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "kuniv/coloring.hpp"
#include "kuniv/error.hpp"
#include "kuniv/families.hpp"
#include "kuniv/oracles.hpp"
#include "kuniv/rational.hpp"
#include "kuniv/sparse.hpp"
#include "support.hpp"

using namespace kuniv;

namespace {

const ExactRational kSeven(7, 10);

// Every I with G < I <= H has (G, I) sparse, straight from the definition.
bool safe_by_definition(const Graph& h, const VertexSet& g, const ExactRational& alpha) {
  std::uint32_t base = 0;
  for (auto v : g) base |= 1U << v;
  const std::uint32_t all = (1U << h.order()) - 1;
  const std::uint32_t free = all & ~base;
  auto edges = [&](std::uint32_t m) {
    std::uint64_t e = 0;
    for (Vertex u = 0; u < h.order(); ++u) {
      for (Vertex v = u + 1; v < h.order(); ++v) e += ((m >> u) & (m >> v) & 1U) && h.adjacent(u, v) ? 1 : 0;
    }
    return e;
  };
  for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free) {
    const ExactRational ratio(static_cast<std::int64_t>(edges(base | sub) - edges(base)), std::popcount(sub));
    if (ratio == alpha.reciprocal()) throw TieError("tie");
    if (ratio > alpha.reciprocal()) return false;
  }
  return true;
}

std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (auto v : s) m |= 1U << v;
  return m;
}

}  // namespace

TEST(ExactRational, Basics) {
  EXPECT_EQ(ExactRational::parse("2/4"), ExactRational(1, 2));
  EXPECT_EQ(ExactRational::parse("3"), ExactRational(3));
  EXPECT_EQ(ExactRational::parse("-1/3").to_string(), "-1/3");
  EXPECT_EQ(ExactRational(6, 3).to_string(), "2");
  EXPECT_LT(ExactRational(1, 3), ExactRational(1, 2));
  EXPECT_EQ(ExactRational(2, 7).reciprocal(), ExactRational(7, 2));
  EXPECT_EQ(ExactRational(1, 2) + ExactRational(1, 3), ExactRational(5, 6));
  EXPECT_DOUBLE_EQ(ExactRational(1, 4).to_double(), 0.25);
  EXPECT_THROW(ExactRational(1, 0), InvalidArgument);
  EXPECT_THROW(ExactRational::parse("1/"), InvalidArgument);
  EXPECT_THROW(ExactRational::parse("a/b"), InvalidArgument);
  EXPECT_THROW(ExactRational(0).reciprocal(), InvalidArgument);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_pair(clique_graph(2), VertexSet(2, {}), ExactRational(1, 2)), PairClass::Sparse);
  EXPECT_EQ(classify_pair(clique_graph(4), VertexSet(4, {}), ExactRational(2, 3)), PairClass::Tie);
  EXPECT_EQ(classify_pair(clique_graph(3), VertexSet(3, {0}), kSeven), PairClass::Dense);
  EXPECT_EQ(classify_counts(3, 2, kSeven), PairClass::Dense);
  EXPECT_EQ(to_string(PairClass::Tie), "Tie");
  EXPECT_THROW(classify_counts(1, 0, kSeven), InvalidArgument);
  EXPECT_THROW(classify_counts(1, 1, ExactRational(1)), InvalidArgument);
  EXPECT_THROW(classify_pair(clique_graph(3), VertexSet::all(3), kSeven), InvalidArgument);
}

TEST(SafeRigid, Examples) {
  EXPECT_TRUE(is_safe(path_graph(3), VertexSet(3, {}), kSeven));
  Graph cherry(3, {{2, 0}, {2, 1}});
  EXPECT_TRUE(is_rigid(cherry, VertexSet(3, {0, 1}), kSeven));
  EXPECT_TRUE(is_rigid(path_graph(4), VertexSet::all(4), kSeven));
  EXPECT_TRUE(is_safe(clique_graph(4), VertexSet::all(4), kSeven));
  EXPECT_THROW(is_safe(clique_graph(4), VertexSet(4, {}), ExactRational(2, 3)), TieError);
  Budgets small;
  small.sparse = 3;
  EXPECT_THROW(is_safe(path_graph(5), VertexSet(5, {}), kSeven, small), BudgetExceeded);
}

TEST(SafeRigid, MatchDefinitions) {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    auto h = test::random_graph(rng, 9);
    const auto alpha = admissible_alpha(ExactRational(1, 5), ExactRational(4, 5), h.order());
    VertexSet g(h.order(), test::random_subset(rng, h.order(), rng.below(h.order() + 1)));
    EXPECT_EQ(is_safe(h, g, alpha), safe_by_definition(h, g, alpha));
    const auto full = (1U << h.order()) - 1;
    EXPECT_EQ(is_rigid(h, g, alpha), oracle::rigid_by_definition(h, full, mask_of(g), alpha));
  }
}

TEST(SafeRigid, RigidityComposes) {
  Rng rng(62);
  int rigid = 0;
  for (int i = 0; i < 400; ++i) {
    auto h = test::random_graph(rng, 8, 3);
    const auto alpha = admissible_alpha(ExactRational(1, 2), ExactRational(4, 5), h.order());
    auto b = test::random_subset(rng, h.order(), rng.below(h.order()));
    if (!is_rigid(h, VertexSet(h.order(), b), alpha)) continue;
    ++rigid;
    auto c = b;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (rng.bernoulli(0.4)) c.push_back(v);
    }
    EXPECT_TRUE(is_rigid(h, VertexSet(h.order(), c), alpha));
  }
  EXPECT_GT(rigid, 30);
}

TEST(Closure, Examples) {
  auto all = closure(path_graph(4), VertexSet::all(4), 3, kSeven);
  EXPECT_EQ(all.closure, VertexSet::all(4));
  EXPECT_TRUE(all.trace.empty());

  auto tri = closure(clique_graph(3), VertexSet(3, {0}), 3, kSeven);
  EXPECT_EQ(tri.closure, VertexSet::all(3));
  EXPECT_EQ(tri.rounds, 1u);
  ASSERT_FALSE(tri.trace.empty());
  EXPECT_EQ(tri.trace.front().base, (std::vector<Vertex>{0}));

  EXPECT_EQ(closure(path_graph(3), VertexSet(3, {0}), 2, kSeven).closure, VertexSet(3, {0}));
  EXPECT_EQ(closure(clique_graph(3), VertexSet(3, {}), 0, kSeven).closure.size(), 0u);
  EXPECT_EQ(closure(empty_graph(6), VertexSet(6, {1, 4}), 2, kSeven).closure, VertexSet(6, {1, 4}));
  Budgets small;
  small.sparse = 2;
  EXPECT_THROW(closure(clique_graph(4), VertexSet(4, {}), 3, kSeven, small), BudgetExceeded);
}

TEST(Closure, MatchesRescanOracle) {
  Rng rng(63);
  int grew = 0;
  for (int i = 0; i < 150; ++i) {
    auto h = test::random_graph(rng, 8, 3);
    const auto l = 1 + rng.below(4);
    const auto alpha = admissible_alpha(ExactRational(1, 3), ExactRational(4, 5), h.order());
    VertexSet a(h.order(), test::random_subset(rng, h.order(), rng.below(4)));
    auto fast = closure(h, a, l, alpha).closure;
    EXPECT_EQ(fast, oracle::rescan_closure(h, a, l, alpha));
    grew += fast.size() > a.size() ? 1 : 0;
  }
  EXPECT_GT(grew, 20);
}

TEST(Closure, MonotoneInflationaryIdempotent) {
  Rng rng(64);
  for (int i = 0; i < 100; ++i) {
    auto h = test::random_graph(rng, 10, 3);
    const auto l = 1 + rng.below(3);
    const auto alpha = admissible_alpha(ExactRational(1, 3), ExactRational(4, 5), h.order());
    auto small = test::random_subset(rng, h.order(), rng.below(4));
    auto large = small;
    large.push_back(static_cast<Vertex>(rng.below(h.order())));
    VertexSet a(h.order(), small), b(h.order(), large);
    auto ca = closure(h, a, l, alpha).closure;
    auto cb = closure(h, b, l, alpha).closure;
    EXPECT_TRUE(std::includes(ca.begin(), ca.end(), a.begin(), a.end()));
    EXPECT_TRUE(std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()));
    EXPECT_EQ(closure(h, ca, l, alpha).closure, ca);
  }
}

TEST(Closure, TraceSetsAreRigid) {
  Rng rng(65);
  for (int i = 0; i < 60; ++i) {
    auto h = test::random_graph(rng, 8, 3);
    const auto alpha = admissible_alpha(ExactRational(1, 2), ExactRational(4, 5), h.order());
    auto r = closure(h, VertexSet(h.order(), {0}), 3, alpha);
    for (const auto& step : r.trace) {
      auto sub = induced_subgraph(h, VertexSet(h.order(), step.added));
      std::vector<Vertex> base;
      for (std::size_t j = 0; j < step.added.size(); ++j) {
        if (std::binary_search(step.base.begin(), step.base.end(), step.added[j])) base.push_back(static_cast<Vertex>(j));
      }
      EXPECT_TRUE(is_rigid(sub.graph, VertexSet(sub.graph.order(), base), alpha));
    }
  }
}

TEST(LSmall, Examples) {
  EXPECT_TRUE(is_l_small(clique_graph(3), 3, kSeven));
  EXPECT_FALSE(is_l_small(clique_graph(3), 1, kSeven));
  EXPECT_TRUE(is_l_small(path_graph(2), 5, kSeven));
  EXPECT_FALSE(is_l_small(empty_graph(4), 2, kSeven));
}

TEST(Sampling, Extremes) {
  EXPECT_EQ(sample_gnp(10, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(sample_gnp(10, 1.0, 1).edge_count(), 45u);
  EXPECT_TRUE(sample_gnp(30, 0.3, 99).same_structure(sample_gnp(30, 0.3, 99)));
  EXPECT_FALSE(sample_gnp(30, 0.3, 99).same_structure(sample_gnp(30, 0.3, 100)));
}

TEST(Sampling, SparseEdgeCount) {
  const std::size_t n = 200;
  const ExactRational alpha(7, 10);
  const double p = std::pow(static_cast<double>(n), -0.7);
  const double pairs = n * (n - 1) / 2.0;
  const double mean = pairs * p, sigma = std::sqrt(pairs * p * (1 - p));
  EXPECT_NEAR(mean, 488.0, 1.0);
  for (std::uint64_t seed : {1, 2, 3}) {
    const double e = static_cast<double>(sample_sparse(n, alpha, seed).edge_count());
    EXPECT_LT(std::abs(e - mean), 4 * sigma);
  }
}

TEST(Admissible, Policy) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(next_prime_above(100), 101u);
  EXPECT_EQ(next_prime_above(101), 103u);
  for (std::size_t n : {1, 5, 14, 60, 1000}) {
    for (auto [lo, hi] : {std::pair{ExactRational(1, 4), ExactRational(1, 3)}, std::pair{ExactRational(1, 2), ExactRational(51, 100)}}) {
      auto a = admissible_alpha(lo, hi, n);
      EXPECT_LT(lo, a);
      EXPECT_LT(a, hi);
      EXPECT_TRUE(is_admissible_alpha(a, n));
      EXPECT_TRUE(is_prime(a.denominator().convert_to<std::uint64_t>()));
      EXPECT_GT(a.denominator(), n * n);
    }
  }
  EXPECT_FALSE(is_admissible_alpha(ExactRational(1, 2), 3));
  EXPECT_THROW(admissible_alpha(ExactRational(1, 2), ExactRational(1, 3), 5), InvalidArgument);
}

TEST(Admissible, NoTiesAtAnyIncrement) {
  const std::size_t n = 12;
  const auto alpha = admissible_alpha(ExactRational(1, 4), ExactRational(1, 3), n);
  for (std::uint64_t v = 1; v <= n; ++v) {
    for (std::uint64_t e = 0; e <= v * (v - 1) / 2 + v * (n - v); ++e) EXPECT_NE(classify_counts(e, v, alpha), PairClass::Tie);
  }
}

TEST(Experiment, ClosureBound) {
  auto zero = closure_bound_experiment(20, ExactRational(1, 3), 0, 5, 7);
  EXPECT_EQ(zero.sizes, (std::vector<std::size_t>(5, 0)));

  const auto alpha = admissible_alpha(ExactRational(1, 4), ExactRational(1, 3), 60);
  auto s = closure_bound_experiment(60, alpha, 3, 50, 11);
  EXPECT_EQ(s.sizes.size(), 50u);
  EXPECT_GE(s.max_size, 3u);
  EXPECT_LT(s.max_size, 30u);
  std::size_t total = 0;
  for (auto [size, count] : s.histogram) total += count;
  EXPECT_EQ(total, 50u);
  EXPECT_EQ(closure_bound_experiment(60, alpha, 3, 50, 11).sizes, s.sizes);
}

TEST(Experiment, SingletonStepsAddNothing) {
  // a single new vertex needs two edges inside B, impossible when |B| = 1
  auto s = closure_bound_experiment(15, ExactRational(9, 10), 1, 10, 3);
  for (auto size : s.sizes) EXPECT_EQ(size, 1u);
}

TEST(Experiment, SafeImpliesSmallColoringNumber) {
  Rng rng(66);
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto alpha = admissible_alpha(ExactRational(1, static_cast<std::int64_t>(k + 1)),
                                        ExactRational(1, static_cast<std::int64_t>(k)), 14);
    int safe = 0;
    for (int i = 0; i < 60; ++i) {
      const auto n = 5 + rng.below(10);
      auto g = sample_sparse(n, alpha, rng.next());
      if (!is_safe(g, VertexSet(n, {}), alpha)) continue;
      ++safe;
      EXPECT_LE(coloring_number(g).coloring_number, 2 * k + 1);
    }
    EXPECT_GT(safe, 10);
  }
}
