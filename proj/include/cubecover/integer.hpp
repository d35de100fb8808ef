#pragma once

#include <gmpxx.h>

#include <cassert>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace cubecover {

/// Arbitrary-size signed integer (sign-and-magnitude, backed by GMP).
///
/// One vocabulary type for every exact integer in the library: binomial
/// coefficients, matrix entries, elimination intermediates, sum values.
/// Zero has a unique representation and no operation can overflow.
class Integer {
 public:
  Integer() : v_(0) {}

  template <std::integral T>
  Integer(T x) : v_() {  // NOLINT: implicit by design
    if constexpr (std::is_signed_v<T>) {
      set_int64(static_cast<long long>(x));
    } else {
      set_uint64(static_cast<unsigned long long>(x));
    }
  }

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on anything else.
  explicit Integer(const std::string& decimal) : v_() {
    if (decimal.empty() || mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
      throw std::invalid_argument("Integer: bad decimal string '" + decimal + "'");
    }
  }

  static Integer from_mpz(mpz_class z) {
    Integer n;
    n.v_ = std::move(z);
    return n;
  }

  const mpz_class& raw() const { return v_; }

  int signum() const { return mpz_sgn(v_.get_mpz_t()); }
  bool is_zero() const { return signum() == 0; }

  Integer abs() const {
    Integer n;
    mpz_abs(n.v_.get_mpz_t(), v_.get_mpz_t());
    return n;
  }

  bool fits_int64() const {
    static const mpz_class lo(std::to_string(INT64_MIN));
    static const mpz_class hi(std::to_string(INT64_MAX));
    return v_ >= lo && v_ <= hi;
  }

  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Integer: value exceeds int64 range");
    if (mpz_fits_slong_p(v_.get_mpz_t())) return mpz_get_si(v_.get_mpz_t());
    // 32-bit long fallback; not hit on this platform but keeps the code honest.
    Integer q = *this;
    const bool neg = signum() < 0;
    std::uint64_t mag = 0;
    mpz_class a;
    mpz_abs(a.get_mpz_t(), v_.get_mpz_t());
    for (int shift = 0; mpz_sgn(a.get_mpz_t()) != 0; shift += 32) {
      mag |= static_cast<std::uint64_t>(mpz_get_ui(a.get_mpz_t()) & 0xffffffffu) << shift;
      mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 32);
    }
    return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
  }

  /// Mathematical residue in [0, m); well-defined for negative values too.
  std::uint64_t mod_u64(std::uint64_t m) const {
    if (m == 0) throw std::domain_error("Integer::mod_u64: zero modulus");
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v_.get_mpz_t(), static_cast<unsigned long>(m));
    return mpz_get_ui(r.get_mpz_t());
  }

  std::string to_string() const { return v_.get_str(); }

  Integer operator-() const {
    Integer n;
    mpz_neg(n.v_.get_mpz_t(), v_.get_mpz_t());
    return n;
  }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
  friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
  friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

  /// |result| is gcd(|a|, |b|); gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return g;
  }

  /// Exact quotient a / b. The caller is responsible for divisibility
  /// (Bareiss-style eliminations guarantee it); asserted in debug builds.
  friend Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: zero divisor");
    assert(mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()) &&
           "div_exact: not divisible");
    Integer q;
    mpz_divexact(q.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return q;
  }

  friend Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return l;
  }

  friend int compare_abs(const Integer& a, const Integer& b) {
    return mpz_cmpabs(a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& n);

 private:
  void set_uint64(unsigned long long mag) {
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof(unsigned long long), 0, 0, &mag);
  }

  void set_int64(long long x) {
    if (x >= 0) {
      set_uint64(static_cast<unsigned long long>(x));
    } else {
      set_uint64(0ULL - static_cast<unsigned long long>(x));
      mpz_neg(v_.get_mpz_t(), v_.get_mpz_t());
    }
  }

  mpz_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Integer& n) {
  return os << n.to_string();
}

}  // namespace cubecover
