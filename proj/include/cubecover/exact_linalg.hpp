#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubecover/field.hpp"
#include "cubecover/integer.hpp"
#include "cubecover/rational.hpp"

namespace cubecover {

/// Dense matrix over exact Integers, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Integer(0)) {}

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Fraction-free (Bareiss) echelon form with full pivoting.
///
/// Every intermediate entry is a minor of the input, division by the previous
/// pivot is exact, and the last pivot of a full-rank square matrix is its
/// determinant. Full pivoting picks the smallest-magnitude nonzero entry
/// (ties by row then column), which both keeps growth down and consumes unit
/// rows of permutation-like blocks first.
struct BareissEchelon {
  IntMatrix u;                       // echelon form after row/col permutation
  std::vector<std::size_t> col_perm; // u column j corresponds to input column col_perm[j]
  std::size_t rank = 0;
  int sign = 1;                      // sign of the accumulated row/col swaps
  Integer det;                       // square input only: last pivot * sign (0 if singular)
};

inline BareissEchelon bareiss_echelon(IntMatrix m) {
  BareissEchelon res;
  const std::size_t rows = m.rows, cols = m.cols;
  res.col_perm.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) res.col_perm[j] = j;

  const Integer one(1);
  Integer prev_pivot(1);
  std::size_t t = 0;
  const std::size_t steps = rows < cols ? rows : cols;
  while (t < steps) {
    // Smallest nonzero |entry| in the trailing submatrix; a +-1 is optimal,
    // so the scan stops at the first one (this makes permutation-like blocks
    // cost next to nothing).
    std::size_t pi = rows, pj = cols;
    bool found_unit = false;
    for (std::size_t i = t; i < rows && !found_unit; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& e = m.at(i, j);
        if (e.is_zero()) continue;
        if (pi == rows || compare_abs(e, m.at(pi, pj)) < 0) {
          pi = i;
          pj = j;
          if (compare_abs(e, one) == 0) {
            found_unit = true;
            break;
          }
        }
      }
    }
    if (pi == rows) break;  // trailing submatrix is zero

    if (pi != t) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
      res.sign = -res.sign;
    }
    if (pj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
      std::swap(res.col_perm[t], res.col_perm[pj]);
      res.sign = -res.sign;
    }

    const Integer pivot = m.at(t, t);
    const bool pivot_is_prev = pivot == prev_pivot;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const Integer head = m.at(i, t);
      if (head.is_zero()) {
        if (pivot_is_prev) continue;  // whole row update is the identity
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!m.at(i, j).is_zero()) m.at(i, j) = div_exact(pivot * m.at(i, j), prev_pivot);
        }
        continue;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        m.at(i, j) = div_exact(pivot * m.at(i, j) - head * m.at(t, j), prev_pivot);
      }
      m.at(i, t) = Integer(0);
    }
    prev_pivot = pivot;
    ++t;
  }

  res.rank = t;
  if (rows == cols) {
    if (rows == 0) {
      res.det = Integer(1);
    } else if (t == rows) {
      res.det = res.sign > 0 ? m.at(t - 1, t - 1) : -m.at(t - 1, t - 1);
    } else {
      res.det = Integer(0);
    }
  }
  res.u = std::move(m);
  return res;
}

inline std::size_t rank_of(const IntMatrix& m) { return bareiss_echelon(m).rank; }

inline Integer determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows == 0) return Integer(1);
  return bareiss_echelon(m).det;
}

/// Exact rational nullspace basis, one vector per free column. Vectors are
/// scaled to coprime integers with positive leading entry, so the basis is
/// canonical for a given input.
inline std::vector<std::vector<Rational>> nullspace_rational(const IntMatrix& m) {
  const BareissEchelon ech = bareiss_echelon(m);
  const std::size_t rank = ech.rank, cols = m.cols;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = rank; free_col < cols; ++free_col) {
    // Solve U x = 0 with x[free_col] = 1 (in echelon coordinates), pivots by
    // back-substitution over the rationals.
    std::vector<Rational> x(cols, Rational(0));
    x[free_col] = Rational(1);
    for (std::size_t ti = rank; ti-- > 0;) {
      Rational acc(0);
      for (std::size_t j = ti + 1; j < cols; ++j) {
        if (!x[j].is_zero() && !ech.u.at(ti, j).is_zero()) {
          acc += Rational(ech.u.at(ti, j)) * x[j];
        }
      }
      x[ti] = -acc / Rational(ech.u.at(ti, ti));
    }

    // Undo the column permutation, clear denominators, normalize.
    std::vector<Rational> v(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) v[ech.col_perm[j]] = x[j];

    Integer denom(1);
    for (const auto& e : v) denom = lcm(denom, e.denominator());
    Integer content(0);
    std::vector<Integer> numer(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      numer[j] = (Rational(denom) * v[j]).numerator();
      content = gcd(content, numer[j]);
    }
    int lead_sign = 0;
    for (std::size_t j = 0; j < cols && lead_sign == 0; ++j) lead_sign = numer[j].signum();
    if (content.is_zero()) content = Integer(1);
    if (lead_sign < 0) content = -content;
    for (std::size_t j = 0; j < cols; ++j) v[j] = Rational(div_exact(numer[j], content));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Dense matrix over an arbitrary exact field.
template <class F>
struct FieldMatrix {
  using Value = typename F::Value;

  std::size_t rows = 0;
  std::size_t cols = 0;
  F field;
  std::vector<Value> a;

  FieldMatrix(std::size_t r, std::size_t c, F f)
      : rows(r), cols(c), field(f), a(r * c, f.zero()) {}

  Value& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot columns. First
/// nonzero entry in each column is the pivot (deterministic).
template <class F>
std::vector<std::size_t> rref(FieldMatrix<F>& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pr = row;
    while (pr < m.rows && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows) continue;
    if (pr != row) {
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
    }
    const auto inv = m.field.one() / m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const auto factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

template <class F>
std::size_t rank_of(const FieldMatrix<F>& m) {
  FieldMatrix<F> copy = m;
  return rref(copy).size();
}

template <class F>
FieldMatrix<F> transpose(const FieldMatrix<F>& m) {
  FieldMatrix<F> t(m.cols, m.rows, m.field);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  }
  return t;
}

/// Canonical nullspace basis from the RREF: one vector per free column, with
/// a 1 in that free coordinate.
template <class F>
std::vector<std::vector<typename F::Value>> nullspace(const FieldMatrix<F>& m) {
  FieldMatrix<F> red = m;
  const auto pivot_cols = rref(red);

  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<typename F::Value>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<typename F::Value> v(m.cols, m.field.zero());
    v[free_col] = m.field.one();
    for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
      v[pivot_cols[t]] = -red.at(t, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cubecover
