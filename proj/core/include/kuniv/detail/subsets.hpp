#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kuniv/graph.hpp"

namespace kuniv::detail {

/// Colexicographic ranking of the r-subsets of {0..n-1}:
///   rank({c_0 < ... < c_{r-1}}) = sum_i C(c_i, i + 1).
class SubsetIndex {
 public:
  SubsetIndex() = default;
  SubsetIndex(std::size_t n, std::size_t r) : n_(n), r_(r), binom_(n + 1, std::vector<std::size_t>(r + 2, 0)) {
    for (std::size_t m = 0; m <= n; ++m) {
      binom_[m][0] = 1;
      for (std::size_t j = 1; j <= r + 1 && j <= m; ++j) binom_[m][j] = binom_[m - 1][j - 1] + binom_[m - 1][j];
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t count() const noexcept { return r_ <= n_ ? binom_[n_][r_] : 0; }

  std::size_t rank(std::span<const Vertex> sorted) const noexcept {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) idx += binom_[sorted[i]][i + 1];
    return idx;
  }

  std::vector<Vertex> unrank(std::size_t idx) const {
    std::vector<Vertex> out(r_);
    std::size_t hi = n_;
    for (std::size_t i = r_; i-- > 0;) {
      // largest c < hi with C(c, i + 1) <= idx
      std::size_t c = hi - 1;
      while (binom_[c][i + 1] > idx) --c;
      out[i] = static_cast<Vertex>(c);
      idx -= binom_[c][i + 1];
      hi = c;
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::vector<std::size_t>> binom_;
};

/// Calls f(subset) for every r-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<Vertex> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    f(static_cast<const std::vector<Vertex>&>(c));
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace kuniv::detail
