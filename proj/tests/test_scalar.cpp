#include <catch2/catch.hpp>

#include "cubecover/binomial.hpp"
#include "cubecover/field.hpp"
#include "cubecover/integer.hpp"
#include "cubecover/prime_field.hpp"
#include "cubecover/rational.hpp"
#include "cubecover/util.hpp"

using namespace cubecover;

namespace {

// Independent route: C(m, k) as a product of ratios, exact at every step.
Integer binomial_by_product(long long m, long long k) {
  if (k < 0 || k > m) return Integer(0);
  Integer acc(1);
  for (long long i = 1; i <= k; ++i) {
    acc = div_exact(acc * Integer(m - k + i), Integer(i));
  }
  return acc;
}

}  // namespace

TEST_CASE("Integer basics") {
  CHECK(Integer().is_zero());
  CHECK(Integer(0) == Integer());
  CHECK(Integer(-7).signum() == -1);
  CHECK(Integer(-7).abs() == Integer(7));
  CHECK((Integer(3) + Integer(4)) * Integer(-2) == Integer(-14));
  CHECK(Integer("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Integer("12x"), std::invalid_argument);
  CHECK_THROWS_AS(Integer(""), std::invalid_argument);

  CHECK(Integer(INT64_MIN).fits_int64());
  CHECK(Integer(INT64_MIN).to_int64() == INT64_MIN);
  CHECK(Integer(INT64_MAX).to_int64() == INT64_MAX);
  CHECK_FALSE((Integer(INT64_MAX) + Integer(1)).fits_int64());
  CHECK_THROWS_AS((Integer(INT64_MAX) + Integer(1)).to_int64(), std::overflow_error);

  CHECK(Integer(-3).mod_u64(7) == 4);
  CHECK(Integer(10).mod_u64(7) == 3);
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(gcd(Integer(0), Integer(0)) == Integer(0));
  CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(div_exact(Integer(-12), Integer(3)) == Integer(-4));
}

TEST_CASE("Integer arithmetic agrees with native on random pairs") {
  SplitMix64 rng(0x5eed0001);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t x = rng.in_range(-1'000'000'000LL, 1'000'000'000LL);
    const std::int64_t y = rng.in_range(-1'000'000'000LL, 1'000'000'000LL);
    CHECK(Integer(x) + Integer(y) == Integer(x + y));
    CHECK(Integer(x) - Integer(y) == Integer(x - y));
    CHECK(Integer(x) * Integer(y) == Integer(x * y));
    CHECK((Integer(x) < Integer(y)) == (x < y));
  }
}

TEST_CASE("binomial examples and contract") {
  CHECK(binomial(5, 2) == Integer(10));
  CHECK(binomial(3, -1) == Integer(0));
  CHECK(binomial(4, 0) == Integer(1));
  CHECK(binomial(0, 0) == Integer(1));
  CHECK(binomial(6, 7) == Integer(0));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial Pascal, symmetry, product oracle up to 40") {
  for (long long m = 0; m <= 40; ++m) {
    for (long long k = 0; k <= m; ++k) {
      const Integer c = binomial(m, k);
      CHECK(c == binomial_by_product(m, k));
      CHECK(c == binomial(m, m - k));
      if (m > 0) CHECK(c == binomial(m - 1, k - 1) + binomial(m - 1, k));
    }
  }
}

TEST_CASE("prime field inverse examples") {
  CHECK(field_inverse(PrimeField(2, 5)) == PrimeField(3, 5));
  CHECK(field_inverse(PrimeField(1, 10007)) == PrimeField(1, 10007));

  const PrimeField minus_one(10006, 10007);
  const PrimeField inv = field_inverse(minus_one);
  CHECK(inv * minus_one == PrimeField(1, 10007));
  CHECK(inv == minus_one);  // (-1)^2 = 1

  CHECK_THROWS_AS(field_inverse(PrimeField(0, 5)), std::domain_error);
}

TEST_CASE("prime field inverse for every nonzero element") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 10007ULL}) {
    const PrimeField one = PrimeField::one(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      const PrimeField v = PrimeField::from_residue(x, p);
      CHECK(v * field_inverse(v) == one);
    }
  }
}

TEST_CASE("prime field construction and mismatch checks") {
  CHECK_THROWS_AS(PrimeField(1, 10), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(PrimeField(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1, 1'000'003ULL * 2), std::invalid_argument);  // too large
  CHECK(PrimeField(-3, 7) == PrimeField(4, 7));
  CHECK(PrimeField::from_integer(Integer(-1), 10007).residue() == 10006);
  CHECK_THROWS_AS(PrimeField(1, 5) + PrimeField(1, 7), std::invalid_argument);

  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(10007));
  CHECK_FALSE(is_prime_u64(10005));
  CHECK_FALSE(is_prime_u64(1));
}

TEST_CASE("rational reduction and round trip") {
  const Rational half(Integer(2), Integer(4));
  CHECK(half.numerator() == Integer(1));
  CHECK(half.denominator() == Integer(2));
  CHECK(Rational(Integer(3), Integer(-6)).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  CHECK(Rational::from_string("-14/21") == Rational(Integer(-2), Integer(3)));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational(7).to_string() == "7");

  SplitMix64 rng(0x5eed0002);
  for (int i = 0; i < 300; ++i) {
    const Rational a(Integer(rng.in_range(-50, 50)), Integer(rng.in_range(1, 30)));
    const Rational c(Integer(rng.in_range(-50, 50)), Integer(rng.in_range(1, 30)));
    CHECK((a + c) - c == a);
    CHECK(a.denominator().signum() == 1);
    CHECK(gcd(a.numerator(), a.denominator()) == Integer(1));
    if (!c.is_zero()) CHECK(a / c * c == a);
  }
}

TEST_CASE("field kinds") {
  CHECK(FieldKind::parse("rational").is_rational());
  CHECK(FieldKind::parse("fp:10007").prime_modulus() == 10007);
  CHECK(FieldKind::prime(10007).to_string() == "fp:10007");
  CHECK_THROWS_AS(FieldKind::parse("fp:10"), std::invalid_argument);
  CHECK_THROWS_AS(FieldKind::parse("real"), std::invalid_argument);
  CHECK_THROWS_AS(FieldKind::parse("fp:abc"), std::invalid_argument);

  const auto name = with_field(FieldKind::prime(5), [](auto field) {
    return field.from_int(-1).to_string();
  });
  CHECK(name == "4");
  CHECK(with_field(FieldKind::rational(), [](auto field) {
    return field.from_string("2/4").to_string();
  }) == "1/2");
  CHECK(with_field(FieldKind::prime(7), [](auto field) {
    return field.from_string("1/2").to_string();
  }) == "4");  // 2^{-1} = 4 in F_7
}
