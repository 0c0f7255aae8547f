#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kuniv/detail/subsets.hpp"
#include "kuniv/graph.hpp"

namespace kuniv {

using Tuple = std::vector<Vertex>;
using TupleSet = std::set<Tuple>;

/// One k-extension formula: a fresh vertex distinct from x_1..x_{k-1} and
/// adjacent to exactly the x_i with i in the pattern.  Positions are
/// 1-based; bit (i-1) of `mask` is position i.
struct ExtensionPattern {
  std::size_t k = 2;
  std::uint32_t mask = 0;

  bool contains(std::size_t position) const noexcept { return (mask >> (position - 1)) & 1U; }
  std::vector<std::size_t> positions() const;
  bool operator==(const ExtensionPattern&) const = default;
};

/// All 2^(k-1) patterns, ordered by mask.  Throws InvalidArgument for k < 2.
std::vector<ExtensionPattern> extension_patterns(std::size_t k);

/// Proper means pairwise distinct entries.
bool is_proper(std::span<const Vertex> tuple) noexcept;

/// The inductive operator on ordered (k-1)-tuples, evaluated literally.  A
/// tuple is in the result iff it is improper, or some pattern S has every
/// witness a' (fresh, adjacency exactly S) making at least one of the k
/// drop-one subtuples of (x, a') a member of `r`.  A pattern without
/// witnesses qualifies vacuously.  Cost is O(n^k 2^(k-1)); intended for
/// small graphs and as a cross-check of `rank_table`.
TupleSet theta_step(const Graph& g, std::size_t k, const TupleSet& r);

/// Ranks of the proper (k-1)-tuples of a graph.  rank(x) is the least m
/// such that x lies in the m-th iterate, counting Theta(empty) as iterate 0;
/// tuples outside the least fixed point have rank omega.  Ranks are
/// invariant under permuting the tuple, so only sorted representatives are
/// stored.
class RankTable {
 public:
  std::size_t k() const noexcept { return k_; }
  std::size_t order() const noexcept { return n_; }

  /// Throws InvalidArgument for an improper tuple or one of the wrong arity.
  ExtendedNat rank(std::span<const Vertex> tuple) const;

  /// Sorted representatives in storage order.
  std::size_t set_count() const noexcept { return ranks_.size(); }
  Tuple set_at(std::size_t index) const;
  ExtendedNat rank_at(std::size_t index) const;
  /// The pattern (over positions of the sorted representative) that
  /// refuted the set when it entered the fixed point.
  std::optional<ExtensionPattern> refuting_pattern_at(std::size_t index) const;

  /// Number of operator applications performed before the fixed point was
  /// observed (the last one adds nothing).
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  friend RankTable rank_table(const Graph& g, std::size_t k);
  std::size_t index_of(std::span<const Vertex> sorted) const;

  static constexpr std::uint32_t kOmega = UINT32_MAX;
  std::size_t n_ = 0;
  std::size_t k_ = 2;
  std::size_t iterations_ = 0;
  detail::SubsetIndex index_;
  std::vector<std::uint32_t> ranks_;
  std::vector<std::uint32_t> refuting_;
};

/// Least fixed point of the operator via a counting worklist: every
/// (set, pattern) keeps the number of witnesses not yet covered by a ranked
/// drop-one subset, and a set is ranked the moment one counter drains.
/// Throws InvalidArgument for k < 2.
RankTable rank_table(const Graph& g, std::size_t k);

/// One challenge of a refutation: Spoiler demands `pattern` of the fresh
/// vertex; Duplicator's best reply is `response`, after which Spoiler keeps
/// the drop-one subtuple `next` of strictly smaller rank.  The final step
/// has no response (the pattern has no witness).
struct CertificateStep {
  Tuple tuple;
  ExtendedNat rank;
  ExtensionPattern pattern;
  std::optional<Vertex> response;
  std::optional<Tuple> next;
};

struct UniversalityReport {
  bool universal = false;
  /// A (sorted) proper (k-1)-tuple of rank omega when universal.
  std::optional<Tuple> witness;
  std::size_t iterations = 0;
  /// For non-universal graphs when requested: a descent from a tuple of
  /// maximal rank down to an unwitnessed pattern.
  std::vector<CertificateStep> certificate;
};

UniversalityReport is_k_universal(const Graph& g, std::size_t k, bool with_certificate = false);
UniversalityReport is_k_universal(const Graph& g, std::size_t k, const RankTable& table,
                                  bool with_certificate = false);

}  // namespace kuniv
