#include <catch2/catch.hpp>

#include "cubecover/subset_lattice.hpp"
#include "cubecover/util.hpp"

using namespace cubecover;

namespace {

template <class F>
LatticeTable<F> table_from(int n, F field, std::initializer_list<long long> values) {
  LatticeTable<F> t(n, field);
  std::size_t i = 0;
  for (long long v : values) t.values[i++] = field.from_int(v);
  REQUIRE(i == t.size());
  return t;
}

template <class F>
LatticeTable<F> random_table(int n, F field, SplitMix64& rng) {
  LatticeTable<F> t(n, field);
  for (auto& v : t.values) v = field.from_int(rng.in_range(-9, 9));
  return t;
}

}  // namespace

TEST_CASE("zeta transform examples") {
  const RationalDomain qq;

  // n=1, alpha = (1, 0): the constant polynomial 1.
  auto t1 = zeta_transform(table_from(1, qq, {1, 0}));
  CHECK(t1.at(0) == Rational(1));
  CHECK(t1.at(1) == Rational(1));

  // n=2, alpha = (1,1,2,3) at (empty, {1}, {2}, {1,2}) -> f = (1,2,3,7).
  auto t2 = zeta_transform(table_from(2, qq, {1, 1, 2, 3}));
  CHECK(t2 == table_from(2, qq, {1, 2, 3, 7}));

  auto zero = zeta_transform(table_from(3, qq, {0, 0, 0, 0, 0, 0, 0, 0}));
  for (const auto& v : zero.values) CHECK(v.is_zero());
}

TEST_CASE("mobius transform examples") {
  const RationalDomain qq;

  auto alpha = mobius_transform(table_from(2, qq, {1, 2, 3, 7}));
  CHECK(alpha == table_from(2, qq, {1, 1, 2, 3}));

  // Constant table c: alpha is c at the empty set, 0 elsewhere.
  auto c = mobius_transform(table_from(3, qq, {5, 5, 5, 5, 5, 5, 5, 5}));
  CHECK(c.at(0) == Rational(5));
  for (SubsetMask j = 1; j < c.size(); ++j) CHECK(c.at(j).is_zero());

  auto zero = mobius_transform(table_from(2, qq, {0, 0, 0, 0}));
  for (const auto& v : zero.values) CHECK(v.is_zero());
}

TEST_CASE("fast transforms match the naive oracle") {
  SplitMix64 rng(0x5eed0003);
  const RationalDomain qq;
  const PrimeDomain fp(10007);
  for (int n = 0; n <= 8; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      auto tq = random_table(n, qq, rng);
      CHECK(zeta_transform(tq) == naive_zeta_transform(tq));
      CHECK(mobius_transform(tq) == naive_mobius_transform(tq));

      auto tp = random_table(n, fp, rng);
      CHECK(zeta_transform(tp) == naive_zeta_transform(tp));
      CHECK(mobius_transform(tp) == naive_mobius_transform(tp));
    }
  }
}

TEST_CASE("zeta and mobius invert each other") {
  SplitMix64 rng(0x5eed0004);
  const RationalDomain qq;
  const PrimeDomain fp(10007);
  for (int n : {0, 1, 2, 5, 9, 12}) {
    auto tq = random_table(n, qq, rng);
    CHECK(mobius_transform(zeta_transform(tq)) == tq);
    CHECK(zeta_transform(mobius_transform(tq)) == tq);

    auto tp = random_table(n, fp, rng);
    CHECK(mobius_transform(zeta_transform(tp)) == tp);
    CHECK(zeta_transform(mobius_transform(tp)) == tp);
  }
}

TEST_CASE("rank order enumeration") {
  const RankOrder small = enumerate_up_to_rank(2, 1);
  REQUIRE(small.size() == 3);
  CHECK(small.mask_at(0) == 0u);
  CHECK(small.mask_at(1) == 0b01u);
  CHECK(small.mask_at(2) == 0b10u);

  const RankOrder all3 = enumerate_up_to_rank(3, 3);
  REQUIRE(all3.size() == 8);
  for (std::size_t i = 1; i < all3.size(); ++i) {
    const int prev = weight(all3.mask_at(i - 1));
    const int cur = weight(all3.mask_at(i));
    CHECK(prev <= cur);  // sizes nondecreasing
    if (prev == cur) CHECK(all3.mask_at(i - 1) < all3.mask_at(i));
  }

  CHECK(enumerate_up_to_rank(10, 2).size() == 56);  // 1 + 10 + 45

  // Inverse lookup is the inverse of enumeration.
  const RankOrder ord = enumerate_up_to_rank(7, 3);
  for (std::size_t i = 0; i < ord.size(); ++i) {
    CHECK(ord.index_of(ord.mask_at(i)) == i);
  }
  CHECK_FALSE(ord.contains(0b1111u));
  CHECK_THROWS_AS(ord.index_of(0b1111u), std::out_of_range);

  // All 2^n masks, all distinct.
  const RankOrder full = enumerate_up_to_rank(6, 6);
  CHECK(full.size() == 64);

  CHECK_THROWS_AS(enumerate_up_to_rank(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_up_to_rank(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_up_to_rank(25, 1), std::invalid_argument);
}

TEST_CASE("masks_of_weight is ordered and complete") {
  for (int n : {0, 1, 4, 6}) {
    std::size_t total = 0;
    for (int w = 0; w <= n; ++w) {
      const auto masks = masks_of_weight(n, w);
      total += masks.size();
      for (std::size_t i = 0; i < masks.size(); ++i) {
        CHECK(weight(masks[i]) == w);
        if (i > 0) CHECK(masks[i - 1] < masks[i]);
      }
    }
    CHECK(total == (std::size_t{1} << n));
  }
}

TEST_CASE("lattice table rejects out-of-range dimensions") {
  CHECK_THROWS_AS(LatticeTable<RationalDomain>(25, RationalDomain{}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeTable<RationalDomain>(-1, RationalDomain{}), std::invalid_argument);
}

TEST_CASE("hex mask helpers") {
  CHECK(mask_to_hex(0) == "0");
  CHECK(mask_to_hex(0xb) == "b");
  CHECK(mask_to_hex(0x1a2) == "1a2");
  CHECK(mask_from_hex("1a2") == 0x1a2u);
  CHECK(mask_from_hex("0x1A2") == 0x1a2u);
  CHECK_THROWS_AS(mask_from_hex("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(mask_from_hex(""), std::invalid_argument);
}
