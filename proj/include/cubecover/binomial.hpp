#pragma once

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "cubecover/integer.hpp"

namespace cubecover {

/// Memoized Pascal triangle. The identity sweeps reuse the same small
/// binomials millions of times, so rows are built once and then read
/// concurrently; a shared_mutex makes growth safe from any thread.
class BinomialCache {
 public:
  /// C(m, k); zero when k < 0 or k > m. Negative m is a contract violation:
  /// the covering-matrix parameter ranges keep every upper index nonnegative,
  /// and rejecting surfaces range bugs instead of evaluating the generalized
  /// extension.
  Integer at(long long m, long long k) {
    if (m < 0) {
      throw std::invalid_argument("binomial: negative upper index m = " + std::to_string(m));
    }
    if (k < 0 || k > m) return Integer(0);
    {
      std::shared_lock lock(mu_);
      if (static_cast<std::size_t>(m) < rows_.size()) return rows_[m][k];
    }
    grow(m);
    std::shared_lock lock(mu_);
    return rows_[m][k];
  }

  /// Builds all rows up to m; call before parallel sections to make every
  /// later at() a pure read.
  void grow(long long m) {
    std::unique_lock lock(mu_);
    while (rows_.size() <= static_cast<std::size_t>(m)) {
      const std::size_t n = rows_.size();
      std::vector<Integer> row;
      row.reserve(n + 1);
      row.push_back(Integer(1));
      for (std::size_t k = 1; k < n; ++k) {
        row.push_back(rows_[n - 1][k - 1] + rows_[n - 1][k]);
      }
      if (n > 0) row.push_back(Integer(1));
      rows_.push_back(std::move(row));
    }
  }

 private:
  std::shared_mutex mu_;
  std::deque<std::vector<Integer>> rows_;
};

inline BinomialCache& binomial_cache() {
  static BinomialCache cache;
  return cache;
}

/// C(m, k) as an exact Integer. See BinomialCache::at for the contract.
inline Integer binomial(long long m, long long k) { return binomial_cache().at(m, k); }

}  // namespace cubecover
