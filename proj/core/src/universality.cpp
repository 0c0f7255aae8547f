#include "kuniv/universality.hpp"

#include <algorithm>
#include <string>

#include "kuniv/error.hpp"

namespace kuniv {

std::vector<std::size_t> ExtensionPattern::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < k; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<ExtensionPattern> extension_patterns(std::size_t k) {
  if (k < 2) throw InvalidArgument("extension patterns need k >= 2, got " + std::to_string(k));
  if (k > 32) throw InvalidArgument("extension patterns limited to k <= 32");
  std::vector<ExtensionPattern> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k - 1)); ++m) {
    out.push_back({k, static_cast<std::uint32_t>(m)});
  }
  return out;
}

bool is_proper(std::span<const Vertex> tuple) noexcept {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return false;
    }
  }
  return true;
}

namespace {

// Adjacency pattern of `v` against the tuple, as a position bit mask.
std::uint32_t pattern_of(const Graph& g, Vertex v, std::span<const Vertex> tuple) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (g.adjacent(v, tuple[i])) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

bool contains_vertex(std::span<const Vertex> tuple, Vertex v) {
  return std::find(tuple.begin(), tuple.end(), v) != tuple.end();
}

void check_k(std::size_t k) {
  if (k < 2) throw InvalidArgument("universality needs k >= 2, got " + std::to_string(k));
  if (k > 32) throw InvalidArgument("universality limited to k <= 32");
}

}  // namespace

TupleSet theta_step(const Graph& g, std::size_t k, const TupleSet& r) {
  check_k(k);
  const std::size_t m = k - 1;
  const std::size_t n = g.order();
  TupleSet out;
  Tuple x(m, 0);
  Tuple drop(m);
  std::vector<Vertex> extended(k);
  auto advance = [&]() {
    for (std::size_t i = 0; i < m; ++i) {
      if (++x[i] < n) return true;
      x[i] = 0;
    }
    return false;
  };
  if (n == 0) return out;
  do {
    if (!is_proper(x)) {
      out.insert(x);
      continue;
    }
    for (const auto& pattern : extension_patterns(k)) {
      bool holds = true;
      for (Vertex a = 0; a < n && holds; ++a) {
        if (contains_vertex(x, a) || pattern_of(g, a, x) != pattern.mask) continue;
        std::copy(x.begin(), x.end(), extended.begin());
        extended[m] = a;
        bool some_drop_in_r = false;
        for (std::size_t j = 0; j < k && !some_drop_in_r; ++j) {
          for (std::size_t i = 0, t = 0; i < k; ++i) {
            if (i != j) drop[t++] = extended[i];
          }
          some_drop_in_r = r.contains(drop);
        }
        holds = some_drop_in_r;
      }
      if (holds) {
        out.insert(x);
        break;
      }
    }
  } while (advance());
  return out;
}

std::size_t RankTable::index_of(std::span<const Vertex> sorted) const { return index_.rank(sorted); }

ExtendedNat RankTable::rank(std::span<const Vertex> tuple) const {
  if (tuple.size() != k_ - 1) {
    throw InvalidArgument("rank lookup needs a " + std::to_string(k_ - 1) + "-tuple");
  }
  if (!is_proper(tuple)) throw InvalidArgument("rank is defined for proper tuples only");
  Tuple sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.back() >= n_) throw InvalidArgument("tuple references a missing vertex");
  return rank_at(index_of(sorted));
}

Tuple RankTable::set_at(std::size_t index) const { return index_.unrank(index); }

ExtendedNat RankTable::rank_at(std::size_t index) const {
  auto r = ranks_.at(index);
  return r == kOmega ? ExtendedNat::omega() : ExtendedNat(r);
}

std::optional<ExtensionPattern> RankTable::refuting_pattern_at(std::size_t index) const {
  if (ranks_.at(index) == kOmega) return std::nullopt;
  return ExtensionPattern{k_, refuting_[index]};
}

RankTable rank_table(const Graph& g, std::size_t k) {
  check_k(k);
  const std::size_t m = k - 1;
  const std::size_t n = g.order();
  const std::size_t patterns = std::size_t{1} << m;

  RankTable t;
  t.n_ = n;
  t.k_ = k;
  t.index_ = detail::SubsetIndex(n, m);
  const std::size_t sets = t.index_.count();
  t.ranks_.assign(sets, RankTable::kOmega);
  t.refuting_.assign(sets, 0);

  // unresolved[s * patterns + p]: witnesses of pattern p over set s none of
  // whose drop-one subsets is ranked yet.
  std::vector<std::uint32_t> unresolved(sets * patterns, 0);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> resolved(sets * words, 0);

  std::vector<std::size_t> layer;
  detail::for_each_subset(n, m, [&](const std::vector<Vertex>& s) {
    auto idx = t.index_.rank(s);
    for (Vertex a = 0; a < n; ++a) {
      if (!contains_vertex(s, a)) ++unresolved[idx * patterns + pattern_of(g, a, s)];
    }
    for (std::size_t p = 0; p < patterns; ++p) {
      if (unresolved[idx * patterns + p] == 0) {
        t.ranks_[idx] = 0;
        t.refuting_[idx] = static_cast<std::uint32_t>(p);
        layer.push_back(idx);
        break;
      }
    }
  });

  // Theta(empty) has been applied once.
  t.iterations_ = 1;
  std::uint32_t current = 0;
  std::vector<std::size_t> next;
  Tuple cand(m);
  while (!layer.empty()) {
    ++t.iterations_;
    next.clear();
    for (auto u_idx : layer) {
      const Tuple u = t.index_.unrank(u_idx);
      // u is a drop-one subset of T + {w} for T = u - w + x, with w in u and
      // x outside u; it resolves witness w of T.
      for (std::size_t wp = 0; wp < m; ++wp) {
        const Vertex w = u[wp];
        for (Vertex x = 0; x < n; ++x) {
          if (contains_vertex(u, x)) continue;
          std::size_t c = 0;
          for (std::size_t i = 0; i < m; ++i) {
            if (i != wp) cand[c++] = u[i];
          }
          cand[c] = x;
          std::sort(cand.begin(), cand.end());
          const auto t_idx = t.index_.rank(cand);
          if (t.ranks_[t_idx] != RankTable::kOmega) continue;
          auto& word = resolved[t_idx * words + w / 64];
          const auto bit = std::uint64_t{1} << (w % 64);
          if (word & bit) continue;
          word |= bit;
          const auto p = pattern_of(g, w, cand);
          if (--unresolved[t_idx * patterns + p] == 0) {
            t.ranks_[t_idx] = current + 1;
            t.refuting_[t_idx] = p;
            next.push_back(t_idx);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer.swap(next);
    ++current;
  }
  return t;
}

UniversalityReport is_k_universal(const Graph& g, std::size_t k, bool with_certificate) {
  return is_k_universal(g, k, rank_table(g, k), with_certificate);
}

UniversalityReport is_k_universal(const Graph& g, std::size_t k, const RankTable& table,
                                  bool with_certificate) {
  check_k(k);
  if (table.k() != k || table.order() != g.order()) {
    throw InvalidArgument("rank table was computed for a different graph or k");
  }
  UniversalityReport report;
  report.iterations = table.iterations();
  const std::size_t m = k - 1;
  if (g.order() < m) return report;

  std::optional<std::size_t> deepest;
  for (std::size_t i = 0; i < table.set_count(); ++i) {
    auto r = table.rank_at(i);
    if (r.is_omega()) {
      report.universal = true;
      report.witness = table.set_at(i);
      return report;
    }
    if (!deepest || r > table.rank_at(*deepest)) deepest = i;
  }
  if (!with_certificate || !deepest) return report;

  // Walk down the ranks: Duplicator picks the witness whose worst drop-one
  // subset has the highest rank, Spoiler keeps that worst subset.
  Tuple tuple = table.set_at(*deepest);
  while (true) {
    const auto idx = detail::SubsetIndex(g.order(), m).rank(tuple);
    CertificateStep step{tuple, table.rank_at(idx), *table.refuting_pattern_at(idx), std::nullopt, std::nullopt};
    std::optional<std::pair<Vertex, Tuple>> best;
    ExtendedNat best_rank;
    for (Vertex a = 0; a < g.order(); ++a) {
      if (contains_vertex(tuple, a) || pattern_of(g, a, tuple) != step.pattern.mask) continue;
      std::optional<Tuple> worst;
      ExtendedNat worst_rank = ExtendedNat::omega();
      for (std::size_t drop = 0; drop < m; ++drop) {
        Tuple sub = tuple;
        sub[drop] = a;
        std::sort(sub.begin(), sub.end());
        auto r = table.rank(sub);
        if (!worst || r < worst_rank) {
          worst = sub;
          worst_rank = r;
        }
      }
      if (!best || worst_rank > best_rank) {
        best = std::make_pair(a, *worst);
        best_rank = worst_rank;
      }
    }
    if (best) {
      step.response = best->first;
      step.next = best->second;
    }
    report.certificate.push_back(step);
    if (!best) break;
    tuple = best->second;
  }
  return report;
}

}  // namespace kuniv
