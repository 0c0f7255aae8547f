#include "kuniv/game.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

bool is_partial_isomorphism(const PebblePosition& pos, const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& s : pos.slots) {
    if (s) pairs.push_back(*s);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [ai, bi] = pairs[i];
      auto [aj, bj] = pairs[j];
      if ((ai == aj) != (bi == bj)) return false;
      if (ai != aj && a.adjacent(ai, aj) != b.adjacent(bi, bj)) return false;
    }
  }
  return true;
}

std::string_view to_string(Winner w) { return w == Winner::Duplicator ? "Duplicator" : "Spoiler"; }

namespace {

std::size_t checked_mul(std::size_t x, std::size_t y) {
  if (x != 0 && y > std::numeric_limits<std::size_t>::max() / x) return std::numeric_limits<std::size_t>::max();
  return x * y;
}

// Dense table of positions.  A position with s pairs is stored at
//   rank(sorted A-vertices) * nB^s + sum_i b_i * nB^i
// where rank is the colexicographic rank of the s-subset of A.
class PositionTable {
 public:
  PositionTable(const Graph& a, const Graph& b, std::size_t k, const Budgets& budgets)
      : a_(a), b_(b), na_(a.order()), nb_(b.order()), top_(std::min(k, a.order())), k_(k) {
    binom_.assign(na_ + 1, std::vector<std::size_t>(top_ + 2, 0));
    for (std::size_t n = 0; n <= na_; ++n) {
      binom_[n][0] = 1;
      for (std::size_t r = 1; r <= top_ + 1 && r <= n; ++r) {
        binom_[n][r] = binom_[n - 1][r - 1] + (r <= n - 1 ? binom_[n - 1][r] : 0);
      }
    }
    pow_.assign(top_ + 2, 1);
    for (std::size_t i = 1; i < pow_.size(); ++i) pow_[i] = checked_mul(pow_[i - 1], nb_);

    std::size_t total = 0;
    for (std::size_t s = 0; s <= top_; ++s) {
      auto slots = checked_mul(binom_[na_][s], pow_[s]);
      total = slots > std::numeric_limits<std::size_t>::max() - total ? slots : total + slots;
      if (total > budgets.game_slots) throw BudgetExceeded("pebble game position table", total, budgets.game_slots);
    }
    alive_.resize(top_ + 1);
    blocked_.resize(top_ + 1);
    for (std::size_t s = 0; s <= top_; ++s) {
      alive_[s].assign(binom_[na_][s] * pow_[s], 0);
      blocked_[s].assign(alive_[s].size(), 0);
    }
    init_legal();
  }

  bool empty_alive() const { return alive_[0][0] != 0; }

  // One step of backward induction.  Returns the number of deleted positions.
  std::size_t sweep() {
    for (std::size_t s = 0; s <= top_ && s < k_; ++s) compute_blocked(s);
    std::size_t removed = 0;
    for (std::size_t s = 0; s <= top_; ++s) removed += apply_deletions(s);
    return removed;
  }

 private:
  std::size_t comb_rank(const std::vector<Vertex>& as) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < as.size(); ++i) r += binom_[as[i]][i + 1];
    return r;
  }

  std::size_t index(const std::vector<Vertex>& as, const std::vector<Vertex>& bs) const {
    std::size_t idx = comb_rank(as) * pow_[as.size()];
    for (std::size_t i = 0; i < bs.size(); ++i) idx += bs[i] * pow_[i];
    return idx;
  }

  // Calls f(index, as, bs) for every slot of level s.
  template <typename F>
  void for_each_slot(std::size_t s, F&& f) const {
    std::vector<Vertex> as(s), bs(s, 0);
    for (std::size_t i = 0; i < s; ++i) as[i] = static_cast<Vertex>(i);
    while (true) {
      std::size_t base = comb_rank(as) * pow_[s];
      std::fill(bs.begin(), bs.end(), 0);
      for (std::size_t off = 0; off < pow_[s]; ++off) {
        f(base + off, as, bs);
        for (std::size_t i = 0; i < s; ++i) {
          if (++bs[i] < nb_) break;
          bs[i] = 0;
        }
      }
      // next s-combination in lexicographic order
      std::size_t i = s;
      while (i > 0 && as[i - 1] == na_ - s + i - 1) --i;
      if (i == 0) return;
      ++as[i - 1];
      for (std::size_t j = i; j < s; ++j) as[j] = as[j - 1] + 1;
    }
  }

  void init_legal() {
    for (std::size_t s = 0; s <= top_; ++s) {
      if (s > 0 && nb_ == 0) continue;
      for_each_slot(s, [&](std::size_t idx, const std::vector<Vertex>& as, const std::vector<Vertex>& bs) {
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = i + 1; j < s; ++j) {
            if (bs[i] == bs[j] || a_.adjacent(as[i], as[j]) != b_.adjacent(bs[i], bs[j])) return;
          }
        }
        alive_[s][idx] = 1;
      });
    }
  }

  // A position Q of size s < k is blocked when some vertex a outside its
  // domain has no image b with Q + (a,b) still alive: Spoiler places a free
  // (or freed) pebble on a and Duplicator cannot answer.
  void compute_blocked(std::size_t s) {
    auto& blocked = blocked_[s];
    std::fill(blocked.begin(), blocked.end(), 0);
    if (s >= top_) return;  // no vertex of A left to place on
    const auto& next = alive_[s + 1];
    std::vector<Vertex> grown(s + 1);
    for_each_slot(s, [&](std::size_t idx, const std::vector<Vertex>& as, const std::vector<Vertex>& bs) {
      if (!alive_[s][idx]) return;
      std::size_t j = 0;
      for (Vertex a = 0; a < na_; ++a) {
        if (j < s && as[j] == a) {
          ++j;
          continue;
        }
        // a is inserted at sorted position j
        for (std::size_t i = 0, t = 0; i <= s; ++i) grown[i] = (i == j) ? a : as[t++];
        std::size_t base = comb_rank(grown) * pow_[s + 1];
        for (std::size_t i = 0; i < s; ++i) base += bs[i] * pow_[i < j ? i : i + 1];
        bool answered = false;
        for (std::size_t b = 0; b < nb_ && !answered; ++b) answered = next[base + b * pow_[j]] != 0;
        if (!answered) {
          blocked[idx] = 1;
          return;
        }
      }
    });
  }

  std::size_t apply_deletions(std::size_t s) {
    std::size_t removed = 0;
    std::vector<Vertex> sub_as(s > 0 ? s - 1 : 0), sub_bs(sub_as.size());
    for_each_slot(s, [&](std::size_t idx, const std::vector<Vertex>& as, const std::vector<Vertex>& bs) {
      if (!alive_[s][idx]) return;
      bool lose = s < k_ && blocked_[s][idx];
      // Spoiler lifts the pebble pair r and re-places it.
      for (std::size_t r = 0; r < s && !lose; ++r) {
        for (std::size_t i = 0, t = 0; i < s; ++i) {
          if (i == r) continue;
          sub_as[t] = as[i];
          sub_bs[t++] = bs[i];
        }
        lose = blocked_[s - 1][index(sub_as, sub_bs)] != 0;
      }
      if (lose) {
        alive_[s][idx] = 0;
        ++removed;
      }
    });
    return removed;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t na_, nb_, top_, k_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<std::size_t> pow_;
  std::vector<std::vector<std::uint8_t>> alive_;
  std::vector<std::vector<std::uint8_t>> blocked_;
};

}  // namespace

GameVerdict duplicator_wins(const Graph& a, const Graph& b, std::size_t k, ExtendedNat rounds,
                            const Budgets& budgets) {
  if (k == 0) throw InvalidArgument("pebble game needs k >= 1");
  PositionTable table(a, b, k, budgets);
  for (std::uint64_t round = 1; rounds.is_omega() || round <= rounds.value(); ++round) {
    auto removed = table.sweep();
    if (!table.empty_alive()) return {Winner::Spoiler, ExtendedNat(round)};
    if (removed == 0) break;  // greatest fixed point reached
  }
  return {Winner::Duplicator, rounds};
}

bool preceq(const Graph& a, const Graph& b, std::size_t k, const Budgets& budgets) {
  return duplicator_wins(a, b, k, ExtendedNat::omega(), budgets).winner == Winner::Duplicator;
}

}  // namespace kuniv
