#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubecover/integer.hpp"
#include "cubecover/prime_field.hpp"
#include "cubecover/rational.hpp"

namespace cubecover {

/// Runtime tag for the coefficient field: the rationals or a prime field F_p.
/// The prime tag always carries a verified prime.
class FieldKind {
 public:
  enum class Tag { rational, prime };

  static FieldKind rational() { return FieldKind(Tag::rational, 0); }

  static FieldKind prime(std::uint64_t p) {
    require_prime_modulus(p);
    return FieldKind(Tag::prime, p);
  }

  /// Accepts "rational" or "fp:P".
  static FieldKind parse(const std::string& s) {
    if (s == "rational") return rational();
    if (s.rfind("fp:", 0) == 0) {
      const std::string digits = s.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("FieldKind: bad modulus in '" + s + "'");
      }
      return prime(std::stoull(digits));
    }
    throw std::invalid_argument("FieldKind: expected 'rational' or 'fp:P', got '" + s + "'");
  }

  Tag tag() const { return tag_; }
  bool is_rational() const { return tag_ == Tag::rational; }
  bool is_prime() const { return tag_ == Tag::prime; }

  std::uint64_t prime_modulus() const {
    if (!is_prime()) throw std::logic_error("FieldKind: not a prime field");
    return p_;
  }

  std::string to_string() const {
    return is_rational() ? "rational" : "fp:" + std::to_string(p_);
  }

  friend bool operator==(const FieldKind& a, const FieldKind& b) {
    return a.tag_ == b.tag_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldKind& a, const FieldKind& b) { return !(a == b); }

 private:
  FieldKind(Tag t, std::uint64_t p) : tag_(t), p_(p) {}
  Tag tag_;
  std::uint64_t p_;
};

/// Field objects: small value types that mint constants of their scalar type.
/// Generic algorithms take one of these and otherwise use the scalar's own
/// operators.

struct RationalDomain {
  using Value = Rational;

  Value zero() const { return Rational(0); }
  Value one() const { return Rational(1); }
  Value from_int(long long x) const { return Rational(x); }
  Value from_integer(const Integer& n) const { return Rational(n); }
  Value from_string(const std::string& s) const { return Rational::from_string(s); }
  FieldKind kind() const { return FieldKind::rational(); }
};

struct PrimeDomain {
  using Value = PrimeField;

  explicit PrimeDomain(std::uint64_t modulus) : p(modulus) { require_prime_modulus(p); }

  Value zero() const { return PrimeField::zero(p); }
  Value one() const { return PrimeField::one(p); }
  Value from_int(long long x) const { return PrimeField::make(x, p); }
  Value from_integer(const Integer& n) const { return PrimeField::from_integer(n, p); }
  Value from_string(const std::string& s) const {
    // "a/b" means a * b^{-1} in F_p.
    const auto slash = s.find('/');
    if (slash == std::string::npos) return from_integer(Integer(s));
    return from_integer(Integer(s.substr(0, slash))) /
           from_integer(Integer(s.substr(slash + 1)));
  }
  FieldKind kind() const { return FieldKind::prime(p); }

  std::uint64_t p;
};

/// Invokes fn with the field object matching a runtime FieldKind.
template <class Fn>
decltype(auto) with_field(const FieldKind& kind, Fn&& fn) {
  if (kind.is_rational()) return std::forward<Fn>(fn)(RationalDomain{});
  return std::forward<Fn>(fn)(PrimeDomain{kind.prime_modulus()});
}

}  // namespace cubecover
