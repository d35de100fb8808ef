#pragma once

#include <gmpxx.h>

#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubecover/integer.hpp"

namespace cubecover {

/// Exact rational number, always reduced to lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() : v_(0) {}

  template <std::integral T>
  Rational(T x) : v_(Integer(x).raw()) {}  // NOLINT: implicit by design

  Rational(const Integer& n) : v_(n.raw()) {}  // NOLINT

  Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "a" or "a/b" with optionally signed decimal parts.
  static Rational from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  }

  Integer numerator() const { return Integer::from_mpz(v_.get_num()); }
  Integer denominator() const { return Integer::from_mpz(v_.get_den()); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int signum() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational::inverse: zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// "a" when the denominator is 1, else "a/b".
  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace cubecover
