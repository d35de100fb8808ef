#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubecover/field.hpp"

namespace cubecover {

/// A subset of {1..n} as an n-bit mask; bit i set means element i+1 is in the
/// subset. The same mask doubles as the cube vertex whose coordinate x_{i+1}
/// is 1 exactly on the subset. n is capped at 24 (2^24 scalars per table).
using SubsetMask = std::uint32_t;

inline constexpr int kMaxLatticeDim = 24;

inline int weight(SubsetMask m) { return std::popcount(m); }

inline void require_dimension(int n) {
  if (n < 0 || n > kMaxLatticeDim) {
    throw std::invalid_argument("dimension out of range [0, 24]: " + std::to_string(n));
  }
}

/// Next mask with the same popcount in increasing numeric order (Gosper).
inline SubsetMask next_same_weight(SubsetMask v) {
  const SubsetMask c = v & (0u - v);
  const SubsetMask r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

/// All masks over n bits with the given weight, increasing numeric order.
inline std::vector<SubsetMask> masks_of_weight(int n, int w) {
  require_dimension(n);
  std::vector<SubsetMask> out;
  if (w < 0 || w > n) return out;
  if (w == 0) {
    out.push_back(0);
    return out;
  }
  const SubsetMask limit = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  SubsetMask m = (1u << w) - 1;
  while (m <= limit) {
    out.push_back(m);
    if (m == 0) break;
    const SubsetMask nxt = next_same_weight(m);
    if (nxt <= m) break;
    m = nxt;
  }
  return out;
}

/// Dense table of one scalar per subset of {1..n}; the carrier for functions
/// like A -> f(A) and J -> alpha_J.
template <class F>
struct LatticeTable {
  using Value = typename F::Value;

  LatticeTable(int n_, F field_)
      : n(n_), field(field_), values(std::size_t{1} << check(n_), field_.zero()) {}

  static int check(int n) {
    require_dimension(n);
    return n;
  }

  std::size_t size() const { return values.size(); }
  Value& at(SubsetMask m) { return values[m]; }
  const Value& at(SubsetMask m) const { return values[m]; }

  friend bool operator==(const LatticeTable& a, const LatticeTable& b) {
    return a.n == b.n && a.values == b.values;
  }

  int n;
  F field;
  std::vector<Value> values;
};

/// output[J] = sum over B subseteq J of input[B]; in-place butterfly,
/// O(n 2^n) additions.
template <class F>
LatticeTable<F> zeta_transform(LatticeTable<F> t) {
  const std::size_t size = t.size();
  for (int d = 0; d < t.n; ++d) {
    const SubsetMask bit = 1u << d;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) t.values[s] += t.values[s ^ bit];
    }
  }
  return t;
}

/// output[J] = sum over A subseteq J of (-1)^{|J \ A|} input[A]; exact inverse
/// of zeta_transform.
template <class F>
LatticeTable<F> mobius_transform(LatticeTable<F> t) {
  const std::size_t size = t.size();
  for (int d = 0; d < t.n; ++d) {
    const SubsetMask bit = 1u << d;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) t.values[s] -= t.values[s ^ bit];
    }
  }
  return t;
}

/// Reference O(3^n) implementations, kept as the oracle for the fast path.
template <class F>
LatticeTable<F> naive_zeta_transform(const LatticeTable<F>& t) {
  LatticeTable<F> out(t.n, t.field);
  for (SubsetMask j = 0; j < t.size(); ++j) {
    auto acc = t.at(j);  // B = J term
    if (j != 0) {
      for (SubsetMask b = (j - 1) & j;; b = (b - 1) & j) {
        acc += t.at(b);
        if (b == 0) break;
      }
    }
    out.at(j) = acc;
  }
  return out;
}

template <class F>
LatticeTable<F> naive_mobius_transform(const LatticeTable<F>& t) {
  LatticeTable<F> out(t.n, t.field);
  for (SubsetMask j = 0; j < t.size(); ++j) {
    const int w = weight(j);
    auto acc = t.at(j);  // A = J term, sign +1
    if (j != 0) {
      for (SubsetMask a = (j - 1) & j;; a = (a - 1) & j) {
        if (((w - weight(a)) & 1) != 0) {
          acc -= t.at(a);
        } else {
          acc += t.at(a);
        }
        if (a == 0) break;
      }
    }
    out.at(j) = acc;
  }
  return out;
}

/// Canonical enumeration of all subsets of size <= r: size ascending, numeric
/// mask value ascending within a size. Total, deterministic, and invertible
/// in O(1), so matrix layouts are reproducible byte-for-byte.
class RankOrder {
 public:
  RankOrder(int n, int r) : n_(n), r_(r) {
    require_dimension(n);
    if (r < 0 || r > n) {
      throw std::invalid_argument("RankOrder: need 0 <= r <= n, got r = " + std::to_string(r) +
                                  ", n = " + std::to_string(n));
    }
    index_.assign(std::size_t{1} << n, kAbsent);
    for (int s = 0; s <= r; ++s) {
      for (SubsetMask m : masks_of_weight(n, s)) {
        index_[m] = static_cast<std::uint32_t>(masks_.size());
        masks_.push_back(m);
      }
    }
  }

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return masks_.size(); }
  SubsetMask mask_at(std::size_t pos) const { return masks_[pos]; }
  const std::vector<SubsetMask>& masks() const { return masks_; }

  bool contains(SubsetMask m) const { return m < index_.size() && index_[m] != kAbsent; }

  std::size_t index_of(SubsetMask m) const {
    if (!contains(m)) {
      throw std::out_of_range("RankOrder: mask not in order: " + std::to_string(m));
    }
    return index_[m];
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;
  int n_;
  int r_;
  std::vector<SubsetMask> masks_;
  std::vector<std::uint32_t> index_;
};

inline RankOrder enumerate_up_to_rank(int n, int r) { return RankOrder(n, r); }

}  // namespace cubecover
