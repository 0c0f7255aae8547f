#include <gtest/gtest.h>

#include "kuniv/error.hpp"
#include "kuniv/families.hpp"
#include "kuniv/game.hpp"
#include "support.hpp"

using namespace kuniv;

namespace {

// Literal game with k indexed pebble slots.  A state assigns each slot
// nothing or a pair (a, b); Spoiler re-places any slot on any vertex of A.
class LiteralGame {
 public:
  LiteralGame(const Graph& a, const Graph& b, std::size_t k) : a_(a), b_(b), k_(k) {
    cell_ = a.order() * b.order() + 1;
    states_ = 1;
    for (std::size_t i = 0; i < k; ++i) states_ *= cell_;
    alive_.assign(states_, 0);
    for (std::size_t s = 0; s < states_; ++s) alive_[s] = legal(s) ? 1 : 0;
  }

  // Duplicator survives `rounds` more rounds from the empty position.
  bool wins(std::size_t rounds) {
    auto w = alive_;
    for (std::size_t r = 0; r < rounds; ++r) {
      auto next = w;
      for (std::size_t s = 0; s < states_; ++s) {
        if (w[s] && !survives(w, s)) next[s] = 0;
      }
      if (next == w) break;
      w = std::move(next);
    }
    return w[0];
  }

 private:
  std::size_t slot(std::size_t s, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) s /= cell_;
    return s % cell_;
  }
  std::size_t with(std::size_t s, std::size_t i, std::size_t value) const {
    std::size_t scale = 1;
    for (std::size_t j = 0; j < i; ++j) scale *= cell_;
    return s - slot(s, i) * scale + value * scale;
  }
  bool legal(std::size_t s) const {
    PebblePosition pos;
    for (std::size_t i = 0; i < k_; ++i) {
      const auto c = slot(s, i);
      if (c == 0) {
        pos.slots.emplace_back();
      } else {
        pos.slots.emplace_back(std::make_pair(static_cast<Vertex>((c - 1) / b_.order()),
                                              static_cast<Vertex>((c - 1) % b_.order())));
      }
    }
    return is_partial_isomorphism(pos, a_, b_);
  }
  bool survives(const std::vector<char>& w, std::size_t s) const {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t x = 0; x < a_.order(); ++x) {
        bool answered = false;
        for (std::size_t y = 0; y < b_.order() && !answered; ++y) answered = w[with(s, i, 1 + x * b_.order() + y)];
        if (!answered) return false;
      }
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t k_, cell_, states_;
  std::vector<char> alive_;
};

}  // namespace

TEST(PartialIsomorphism, Examples) {
  auto k2 = clique_graph(2);
  PebblePosition both{{std::make_pair(0u, 0u), std::make_pair(1u, 1u)}};
  EXPECT_TRUE(is_partial_isomorphism(both, k2, k2));
  EXPECT_FALSE(is_partial_isomorphism(both, k2, empty_graph(2)));
  PebblePosition collapse{{std::make_pair(0u, 0u), std::make_pair(0u, 1u)}};
  EXPECT_FALSE(is_partial_isomorphism(collapse, k2, k2));
  PebblePosition merge{{std::make_pair(0u, 0u), std::make_pair(1u, 0u)}};
  EXPECT_FALSE(is_partial_isomorphism(merge, k2, k2));
  PebblePosition doubled{{std::make_pair(1u, 0u), std::nullopt, std::make_pair(1u, 0u)}};
  EXPECT_TRUE(is_partial_isomorphism(doubled, k2, k2));
}

TEST(Game, Examples) {
  auto single = empty_graph(1);
  EXPECT_EQ(duplicator_wins(single, path_graph(3), 2, ExtendedNat::omega()).winner, Winner::Duplicator);
  auto v = duplicator_wins(clique_graph(3), path_graph(3), 3, ExtendedNat::omega());
  EXPECT_EQ(v.winner, Winner::Spoiler);
  EXPECT_EQ(v.rounds_bound, ExtendedNat(3));
  EXPECT_EQ(duplicator_wins(clique_graph(4), clique_graph(3), 3, ExtendedNat::omega()).winner, Winner::Duplicator);

  EXPECT_TRUE(preceq(clique_graph(2), clique_graph(3), 2));
  EXPECT_FALSE(preceq(clique_graph(3), clique_graph(2), 3));
  EXPECT_EQ(to_string(Winner::Spoiler), "Spoiler");
}

TEST(Game, EmptyTargetLosesAtOnce) {
  auto v = duplicator_wins(empty_graph(2), empty_graph(0), 1, ExtendedNat::omega());
  EXPECT_EQ(v.winner, Winner::Spoiler);
  EXPECT_EQ(v.rounds_bound, ExtendedNat(1));
  EXPECT_EQ(duplicator_wins(empty_graph(2), empty_graph(0), 1, ExtendedNat(0)).winner, Winner::Duplicator);
  EXPECT_TRUE(preceq(empty_graph(0), empty_graph(3), 2));
}

TEST(Game, Errors) {
  EXPECT_THROW(duplicator_wins(clique_graph(2), clique_graph(2), 0, ExtendedNat(1)), InvalidArgument);
  Budgets tiny;
  tiny.game_slots = 100;
  EXPECT_THROW(duplicator_wins(clique_graph(8), clique_graph(8), 3, ExtendedNat::omega(), tiny), BudgetExceeded);
}

TEST(Game, AgreesWithLiteralIndexedGame) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = 1 + rng.below(3);
    const std::size_t cap = k == 3 ? 3 : 4;
    auto a = test::random_graph(rng, cap);
    auto b = test::random_graph(rng, cap);
    LiteralGame literal(a, b, k);
    for (std::size_t r = 0; r <= 4; ++r) {
      const bool expected = literal.wins(r);
      EXPECT_EQ(duplicator_wins(a, b, k, ExtendedNat(r)).winner == Winner::Duplicator, expected)
          << "k=" << k << " rounds=" << r;
    }
    EXPECT_EQ(preceq(a, b, k), literal.wins(1000)) << "k=" << k;
  }
}

TEST(Game, SpoilerBoundIsTight) {
  Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    auto a = test::random_graph(rng, 6);
    auto b = test::random_graph(rng, 6);
    const std::size_t k = 1 + rng.below(3);
    auto v = duplicator_wins(a, b, k, ExtendedNat::omega());
    if (v.winner == Winner::Duplicator) {
      EXPECT_TRUE(v.rounds_bound.is_omega());
      continue;
    }
    const auto r = v.rounds_bound.value();
    EXPECT_EQ(duplicator_wins(a, b, k, ExtendedNat(r)).winner, Winner::Spoiler);
    EXPECT_EQ(duplicator_wins(a, b, k, ExtendedNat(r - 1)).winner, Winner::Duplicator);
  }
}

TEST(Game, MonotoneInRoundsAndPebbles) {
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    auto a = test::random_graph(rng, 8);
    auto b = test::random_graph(rng, 8);
    for (std::size_t k = 2; k <= 3; ++k) {
      bool prev = true;
      for (std::size_t r = 0; r <= 6; ++r) {
        const bool now = duplicator_wins(a, b, k, ExtendedNat(r)).winner == Winner::Duplicator;
        EXPECT_TRUE(prev || !now);
        prev = now;
      }
      const bool eternal = preceq(a, b, k);
      if (eternal) {
        EXPECT_TRUE(prev);
        EXPECT_TRUE(preceq(a, b, k - 1));
      }
    }
  }
}

TEST(Game, Transitive) {
  Rng rng(9);
  int chains = 0;
  for (int i = 0; i < 300; ++i) {
    auto a = test::random_graph(rng, 7);
    auto b = test::random_graph(rng, 7);
    auto c = test::random_graph(rng, 7);
    const std::size_t k = 1 + rng.below(3);
    if (preceq(a, b, k) && preceq(b, c, k)) {
      ++chains;
      EXPECT_TRUE(preceq(a, c, k));
    }
  }
  EXPECT_GT(chains, 10);
}

TEST(Game, InducedSubgraphsEmbed) {
  Rng rng(10);
  for (int i = 0; i < 40; ++i) {
    auto g = test::random_graph(rng, 8);
    auto h = induced_subgraph(g, VertexSet(g.order(), test::random_subset(rng, g.order(), rng.below(g.order() + 1))));
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(preceq(h.graph, g, k));
    EXPECT_TRUE(preceq(g, g, 3));
  }
}
