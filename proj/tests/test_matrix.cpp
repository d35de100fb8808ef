#include <catch2/catch.hpp>

#include <cstdlib>
#include <sstream>

#include "cubecover/cover_matrix.hpp"

using namespace cubecover;

TEST_CASE("regimes by parameters") {
  CHECK(regime_for(4, 1) == MatrixRegime::low);
  CHECK(regime_for(5, 2) == MatrixRegime::low);
  CHECK(regime_for(2, 1) == MatrixRegime::high);
  CHECK(regime_for(5, 3) == MatrixRegime::high);
  CHECK(regime_for(10, 5) == MatrixRegime::high);
}

TEST_CASE("entry formula on hand cases") {
  for (int n = 1; n <= 6; ++n) {
    const Integer expected(n % 2 == 0 ? 1 : -1);  // (-1)^n
    CHECK(cover_matrix_entry(n, 0, 0, 0) == expected);
  }
  CHECK(cover_matrix_entry(4, 1, 0, 0) == Integer(-3));  // (-1)^3 C(3,1)
  CHECK(cover_matrix_entry(4, 1, 0b01, 0b01) == Integer(0));  // overlap
  CHECK(cover_matrix_entry(6, 2, 0b011, 0b110) == Integer(0));  // overlap
  CHECK_THROWS_AS(cover_matrix_entry(4, 1, 0b011, 0), std::invalid_argument);  // |A| > r
  CHECK_THROWS_AS(cover_matrix_entry(4, 1, 0b10000, 0), std::invalid_argument);  // outside n
  CHECK_THROWS_AS(cover_matrix_entry(4, 5, 0, 0), std::invalid_argument);

  // High regime: rows of size >= n - r are unit rows at the complement.
  CHECK(cover_matrix_entry(2, 1, 0b01, 0b10) == Integer(1));
  CHECK(cover_matrix_entry(2, 1, 0b01, 0b01) == Integer(0));
  CHECK(cover_matrix_entry(2, 1, 0b01, 0) == Integer(0));
}

TEST_CASE("build on hand cases") {
  const SubsetMatrix m10 = build_cover_matrix(1, 0);
  REQUIRE(m10.dim() == 1);
  CHECK(m10.entry_at(0, 0) == Integer(-1));

  // (2,1): high regime, canonical order (empty, {1}, {2}).
  const SubsetMatrix m21 = build_cover_matrix(2, 1);
  std::ostringstream dump;
  write_matrix_dump(dump, m21);
  CHECK(dump.str() == "n=2 r=1 dim=3\n-1 -1 -1\n0 0 1\n0 1 0\n");

  // (4,1): low regime; the entry formula gives row(empty) = -3,-1,-1,-1,-1
  // and row({i}) = 2 at the empty column, 0 on the diagonal, 1 elsewhere.
  const SubsetMatrix m41 = build_cover_matrix(4, 1);
  REQUIRE(m41.dim() == 5);
  const long long expected[5][5] = {{-3, -1, -1, -1, -1},
                                    {2, 0, 1, 1, 1},
                                    {2, 1, 0, 1, 1},
                                    {2, 1, 1, 0, 1},
                                    {2, 1, 1, 1, 0}};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) CHECK(m41.entry_raw(i, j) == expected[i][j]);
  }

  // Matrix entries agree with the standalone entry operation everywhere.
  const SubsetMatrix m62 = build_cover_matrix(6, 2);
  for (std::size_t i = 0; i < m62.dim(); ++i) {
    for (std::size_t j = 0; j < m62.dim(); ++j) {
      CHECK(Integer(m62.entry_raw(i, j)) ==
            cover_matrix_entry(6, 2, m62.order().mask_at(i), m62.order().mask_at(j)));
    }
  }
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(build_cover_matrix(21, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_cover_matrix(20, 6), std::invalid_argument);  // dim 60460
  CHECK_THROWS_AS(build_cover_matrix(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(build_cover_matrix(4, 5), std::invalid_argument);
  CHECK_NOTHROW(build_cover_matrix(12, 2));
}

TEST_CASE("involution claim on examples") {
  CHECK(verify_involution(4, 1).status == ReportStatus::pass);
  CHECK(verify_involution(10, 4).status == ReportStatus::pass);
  for (int n = 2; n <= 8; ++n) {
    CHECK(verify_involution(n, 0).status == ReportStatus::pass);  // [(-1)^n]^2 = [1]
  }
  CHECK_THROWS_AS(verify_involution(2, 1), std::invalid_argument);  // wrong regime
  CHECK_THROWS_AS(verify_involution(4, 2), std::invalid_argument);
}

TEST_CASE("high regime structure on examples") {
  for (auto [n, r] : {std::pair{2, 1}, {4, 2}, {5, 5}, {6, 6}, {7, 4}}) {
    const Report rep = verify_high_regime(n, r);
    CHECK(rep.status == ReportStatus::pass);
  }
  CHECK_THROWS_AS(verify_high_regime(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_high_regime(9, 4), std::invalid_argument);
}

TEST_CASE("nonzero entries are disjoint pairs or complement units") {
  for (auto [n, r] : {std::pair{6, 2}, {6, 4}, {7, 3}, {5, 4}}) {
    const SubsetMatrix m = build_cover_matrix(n, r);
    const SubsetMask full = (1u << n) - 1;
    const bool high = m.regime() == MatrixRegime::high;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const SubsetMask a = m.order().mask_at(i);
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (m.entry_raw(i, j) == 0) continue;
        const SubsetMask b = m.order().mask_at(j);
        const bool unit_row = high && weight(a) >= n - r;
        if (unit_row) {
          CHECK(b == (full ^ a));
        } else {
          CHECK((a & b) == 0u);
        }
      }
    }
  }
}

TEST_CASE("solve_homogeneous certifies the unique zero solution") {
  CHECK(solve_homogeneous(build_cover_matrix(4, 1)).empty());
  CHECK(solve_homogeneous(build_cover_matrix(2, 1)).empty());

  // Cross-check against the exact determinant on a small sweep.
  for (int n = 2; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      const SubsetMatrix m = build_cover_matrix(n, r);
      const Integer det = determinant(m.to_int_matrix());
      CHECK_FALSE(det.is_zero());
      CHECK(solve_homogeneous(m).empty());
    }
  }
}

TEST_CASE("injected sign bug is caught (test harness hook)") {
  REQUIRE(setenv("CUBE_COVER_TEST_INJECT", "matrix-sign-bug", 1) == 0);
  const SubsetMatrix corrupted = build_cover_matrix(4, 1);
  CHECK(corrupted.entry_raw(0, 0) == 3);  // flipped sign
  CHECK(verify_involution(4, 1).status == ReportStatus::fail);
  REQUIRE(unsetenv("CUBE_COVER_TEST_INJECT") == 0);
  CHECK(verify_involution(4, 1).status == ReportStatus::pass);
}
