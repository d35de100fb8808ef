#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubecover/integer.hpp"

namespace cubecover {

/// Largest modulus we accept; keeps trial division instant and every product
/// of two residues inside uint64.
inline constexpr std::uint64_t kMaxPrimeModulus = 1'000'000;

/// Trial division up to sqrt(p).
inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void require_prime_modulus(std::uint64_t p) {
  if (p > kMaxPrimeModulus) {
    throw std::invalid_argument("prime modulus too large (max " +
                                std::to_string(kMaxPrimeModulus) + "): " + std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }
}

/// Residue in F_p. Every value carries its (verified) modulus, so a mixed-field
/// operation is a detectable bug, not silent garbage.
class PrimeField {
 public:
  /// Checks primality of p; use zero(p)/one(p)/make(..) from hot loops where
  /// the modulus is already trusted.
  PrimeField(std::int64_t value, std::uint64_t p) {
    require_prime_modulus(p);
    p_ = p;
    r_ = reduce_i64(value, p);
  }

  static PrimeField make(std::int64_t value, std::uint64_t p) { return PrimeField(value, p); }

  /// Fast constructors for already-verified moduli (no primality re-check).
  static PrimeField zero(std::uint64_t p) { return PrimeField(trusted{}, 0, p); }
  static PrimeField one(std::uint64_t p) { return PrimeField(trusted{}, p > 1 ? 1 : 0, p); }
  static PrimeField from_residue(std::uint64_t r, std::uint64_t p) {
    return PrimeField(trusted{}, r % p, p);
  }
  static PrimeField from_integer(const Integer& n, std::uint64_t p) {
    return PrimeField(trusted{}, n.mod_u64(p), p);
  }

  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }

  PrimeField operator-() const { return PrimeField(trusted{}, r_ == 0 ? 0 : p_ - r_, p_); }

  PrimeField& operator+=(const PrimeField& o) {
    check_same(o);
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    check_same(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    check_same(o);
    r_ = (r_ * o.r_) % p_;  // p <= 1e6, so the product fits uint64
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }

  friend PrimeField operator+(PrimeField a, const PrimeField& b) { a += b; return a; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { a -= b; return a; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { a *= b; return a; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { a /= b; return a; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    a.check_same(b);
    return a.r_ == b.r_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

  /// Multiplicative inverse by extended Euclid; zero input signals
  /// division-by-zero.
  PrimeField inverse() const {
    if (r_ == 0) throw std::domain_error("PrimeField: inverse of zero (division by zero)");
    std::int64_t t = 0, new_t = 1;
    std::int64_t rr = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(r_);
    while (new_r != 0) {
      const std::int64_t q = rr / new_r;
      t = std::exchange(new_t, t - q * new_t);
      rr = std::exchange(new_r, rr - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return PrimeField(trusted{}, static_cast<std::uint64_t>(t), p_);
  }

  std::string to_string() const { return std::to_string(r_); }

  friend std::ostream& operator<<(std::ostream& os, const PrimeField& x);

 private:
  struct trusted {};
  PrimeField(trusted, std::uint64_t r, std::uint64_t p) : r_(r), p_(p) {}

  static std::uint64_t reduce_i64(std::int64_t v, std::uint64_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }

  void check_same(const PrimeField& o) const {
    if (p_ != o.p_) {
      throw std::invalid_argument("PrimeField: mixed moduli " + std::to_string(p_) + " and " +
                                  std::to_string(o.p_));
    }
  }

  std::uint64_t r_;
  std::uint64_t p_;
};

/// x^{-1} in F_p; pre: x != 0.
inline PrimeField field_inverse(const PrimeField& x) { return x.inverse(); }

inline std::ostream& operator<<(std::ostream& os, const PrimeField& x) {
  return os << x.residue() << " mod " << x.modulus();
}

}  // namespace cubecover
