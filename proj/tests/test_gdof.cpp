#include <gtest/gtest.h>

#include "macic/gdof.hpp"
#include "macic/region.hpp"
#include "test_util.hpp"

using namespace macic;
using macic::test::make_polytope;
using macic::test::R;

namespace {

gdof::Spec two_user_spec(const Rational& direct, const Rational& cross) {
  gdof::Spec s;
  s.direct = {std::vector<Rational>{direct, direct}, std::vector<Rational>{direct, direct}};
  s.cross = {cross, cross};
  return s;
}

// Piecewise-linear symmetric GDoF for K >= 2 written out per branch.
Rational v_curve(int k, const Rational& a) {
  const Rational K = k;
  if (a <= 1 - 1 / K) return Rational(1 / K);
  if (a <= 1) return Rational((2 - a) / (K + 1));
  if (a <= 1 + 1 / K) return Rational(a / (K + 1));
  return Rational(1 / K);
}

}  // namespace

TEST(GdofTable, Examples) {
  const auto t = gdof::gdof_table(two_user_spec(1, R("1/2")));
  EXPECT_EQ(t.A(Cell::a, 0b01), R("1/2"));
  EXPECT_EQ(t.E(Cell::a, 0b11), 1);
  const auto s = gdof::gdof_table(two_user_spec(1, R("3/2")));
  EXPECT_EQ(s.G(Cell::b, 0b10), R("3/2"));
  EXPECT_EQ(s.A(Cell::a, 0b01), 0);
  EXPECT_THROW(gdof::gdof_table(two_user_spec(1, R("-1"))), std::invalid_argument);
}

TEST(GdofRegion, NoInterferenceIsUnitSquare) {
  const Polytope p = gdof::gdof_region(gdof::Spec::symmetric(1, 0));
  EXPECT_TRUE(polytope_equal(p, make_polytope(2, true, {{{1, 0}, 1}, {{0, 1}, 1}})));
}

TEST(Dsym, ClosedFormExamples) {
  EXPECT_EQ(gdof::dsym_closed_form(2, R("1")), R("1/3"));
  EXPECT_EQ(gdof::dsym_closed_form(3, R("9/10")), R("11/40"));
  EXPECT_EQ(gdof::dsym_closed_form(4, R("9/8")), R("9/40"));
  // Shoulders give the cell a total of one.
  EXPECT_EQ(gdof::dsym_closed_form(2, R("2/5")), R("1/2"));
  EXPECT_EQ(gdof::dsym_closed_form(2, R("1/2")), R("1/2"));
  EXPECT_EQ(gdof::dsym_closed_form(3, R("3")), R("1/3"));
  EXPECT_THROW(gdof::dsym_closed_form(1, 1), std::invalid_argument);
  EXPECT_THROW(gdof::dsym_closed_form(2, -1), std::invalid_argument);
}

TEST(Dsym, RegionMatchesPiecewiseOracle) {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& a : gdof::alpha_grid(3, R("1/12"))) {
      EXPECT_EQ(gdof::dsym_region(k, a), v_curve(k, a)) << k << " " << a;
      EXPECT_EQ(gdof::dsym_closed_form(k, a), v_curve(k, a)) << k << " " << a;
    }
  }
}

TEST(Dsym, TableLevelMatchesPolytopeLevel) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& a : gdof::alpha_grid(3, R("1/4"))) {
      EXPECT_EQ(gdof::dsym_region(k, a), symmetric_max(gdof::gdof_region(gdof::Spec::symmetric(k, a))));
    }
  }
}

TEST(Dsym, TwoUserWCurve) {
  EXPECT_EQ(gdof::dsym_region(1, R("1/2")), R("1/2"));
  EXPECT_EQ(gdof::dsym_region(1, R("2/3")), R("2/3"));
  EXPECT_EQ(gdof::dsym_region(1, R("1")), R("1/2"));
  EXPECT_EQ(gdof::dsym_region(1, R("2")), 1);
  EXPECT_EQ(gdof::dsym_region(1, R("0")), 1);
}

TEST(Timeshare, Examples) {
  EXPECT_EQ(gdof::timeshare_sum_gdof(0), 1);
  EXPECT_EQ(gdof::timeshare_sum_gdof(1), R("2/3"));
  EXPECT_EQ(gdof::timeshare_sum_gdof(1), 2 * gdof::dsym_region(2, 1));
  EXPECT_EQ(gdof::timeshare_sum_gdof(R("1/2")), R("2/3"));
  EXPECT_LT(gdof::timeshare_sum_gdof(R("1/2")), 2 * gdof::dsym_region(2, R("1/2")));
}

TEST(AlphaGrid, IncludesEndpoint) {
  const auto g = gdof::alpha_grid(3, R("1/20"));
  ASSERT_EQ(g.size(), 61u);
  EXPECT_EQ(g.front(), 0);
  EXPECT_EQ(g.back(), 3);
  EXPECT_EQ(gdof::alpha_grid(R("1/2"), R("1/3")).size(), 2u);
}

TEST(Curves, RowsCoverEveryK) {
  const auto rows = gdof::dsym_curve({1, 2}, gdof::alpha_grid(1, R("1/2")));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[5].users_per_cell, 2);
  EXPECT_EQ(rows[5].dsym, R("1/3"));
  EXPECT_EQ(rows[5].sum, R("2/3"));
  const auto ts = gdof::timeshare_curve({R("1")});
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].timeshare, ts[0].superposition);
}
