#include <gtest/gtest.h>

#include "macic/errors.hpp"
#include "macic/lp.hpp"
#include "macic/random.hpp"
#include "macic/region.hpp"
#include "test_util.hpp"

using namespace macic;
using macic::test::make_polytope;
using macic::test::R;

namespace {

SetFunctionTable constant_table(int ka, int kb, const Rational& v) {
  SetFunctionTable t(ka, kb);
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(t.users(c), domain(f), c)) t.set(f, c, m.bits, v);
    }
  }
  return t;
}

std::size_t expected_rows(int ka, int kb) {
  const std::size_t ua = std::size_t{1} << (ka - 1), ub = std::size_t{1} << (kb - 1);
  const std::size_t oa = (std::size_t{1} << ka) - 1, ob = (std::size_t{1} << kb) - 1;
  return oa + ob + ua * ob + oa * ub + ua * ub + ua * oa * ub + ua * ob * ub;
}

// Optimum of max t s.t. t * (1, ..., 1) in p, as a one-variable LP.
Rational tied_lp(const Polytope& p) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& q : p.inequalities) {
    Rational s = 0;
    for (const auto& c : q.coeffs) s += c;
    rows.push_back({s});
    rhs.push_back(q.rhs);
  }
  rows.push_back({Rational(-1)});
  rhs.emplace_back(0);
  const std::vector<Rational> obj{Rational(1)};
  const auto r = lp::maximize(rows, rhs, obj);
  EXPECT_EQ(r.status, lp::Status::optimal);
  return r.value;
}

}  // namespace

TEST(GenericRegion, RowCounts) {
  EXPECT_EQ(build_generic_region(constant_table(1, 1, 1)).inequalities.size(), 7u);
  const Polytope p = build_generic_region(constant_table(2, 2, 1));
  EXPECT_EQ(p.inequalities.size(), 46u);
  EXPECT_EQ(p.dim, 4u);
  for (int ka = 1; ka <= 4; ++ka) {
    for (int kb = 1; kb <= 4; ++kb) {
      EXPECT_EQ(generic_region_row_count(ka, kb), expected_rows(ka, kb));
      EXPECT_EQ(build_generic_region(constant_table(ka, kb, 1)).inequalities.size(), expected_rows(ka, kb));
    }
  }
}

TEST(GenericRegion, RateInBothMasksGetsCoefficientTwo) {
  const Polytope p = build_generic_region(constant_table(2, 2, 1));
  bool found = false;
  for (const auto& q : p.inequalities) {
    if (q.label == "A{a0,a1}+G{a0}+E{b0}") {
      found = true;
      EXPECT_EQ(q.coeffs, (std::vector<Rational>{2, 1, 1, 0}));
      EXPECT_EQ(q.rhs, 3);
    }
  }
  EXPECT_TRUE(found);
}

TEST(GenericRegion, IncompleteTableThrows) {
  SetFunctionTable t(1, 1);
  EXPECT_THROW(build_generic_region(t), MissingEntryError);
}

TEST(GenericRegion, EnlargingTableNeverShrinksRegion) {
  rnd::Rng rng(21);
  std::uniform_int_distribution<int> bump(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const SetFunctionTable t = rnd::random_box_table(rng, 1 + trial % 2, 1 + (trial / 2) % 2);
    SetFunctionTable big = t;
    for (Cell c : kCells) {
      for (SetFn f : kSetFns) {
        for (const auto& m : enum_subsets(t.users(c), domain(f), c)) {
          big.set(f, c, m.bits, t.get(f, c, m.bits) + make_rational(bump(rng), 4));
        }
      }
    }
    const Polytope small_region = build_generic_region(t);
    for (const auto& q : build_generic_region(big).inequalities) EXPECT_TRUE(implies(small_region, q)) << q.label;
  }
}

TEST(SymmetricMax, Examples) {
  EXPECT_EQ(symmetric_max(make_polytope(2, true, {{{1, 1}, 1}})), R("1/2"));
  EXPECT_EQ(symmetric_max(make_polytope(2, true, {{{2, 1}, 4}, {{1, 1}, 3}})), R("4/3"));
  EXPECT_THROW(symmetric_max(make_polytope(2, true, {{{1, -1}, 1}})), std::invalid_argument);
  EXPECT_THROW(symmetric_max(make_polytope(1, true, {{{1}, -1}})), EmptyPolytopeError);
}

TEST(SymmetricMax, MatchesTiedCoordinateLp) {
  rnd::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int ka = 1 + trial % 3, kb = 1 + (trial / 3) % 2;
    const SetFunctionTable t = trial % 2 ? rnd::random_box_table(rng, ka, kb) : rnd::random_entropic_table(rng, ka, kb);
    const Polytope p = build_generic_region(t);
    const Rational lp_value = tied_lp(p);
    EXPECT_EQ(symmetric_max(p), lp_value) << trial;
    EXPECT_EQ(symmetric_max(t), lp_value) << trial;
  }
}

TEST(SetFunctionTable, PlantedViolationsAreFound) {
  SetFunctionTable t = constant_table(2, 1, 1);
  EXPECT_TRUE(chain_rule_violations(t).empty());
  EXPECT_TRUE(negativity_violations(t).empty());
  t.set(SetFn::A, Cell::a, 0b11, 2);  // A > E on {a0,a1}
  t.set(SetFn::G, Cell::b, 0b1, -1);  // B > G and negative
  EXPECT_EQ(chain_rule_violations(t).size(), 2u);
  EXPECT_EQ(negativity_violations(t).size(), 1u);

  RealSetFunctionTable r = to_real(constant_table(2, 1, 1));
  r.set(SetFn::B, Cell::a, 0b01, 1.5);  // B{a0} > B{a0,a1}
  EXPECT_EQ(monotonicity_violations(r, 1e-9).size(), 1u);
  EXPECT_THROW(t.set(SetFn::A, Cell::a, 0b10, 1), std::invalid_argument);  // upsilon needs a0
}

TEST(SetFunctionTable, RationalizeIsDyadic) {
  RealSetFunctionTable r(1, 1);
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) r.set(f, c, 1, 0.1);
  }
  const auto t = rationalize(r);
  EXPECT_EQ(t.A(Cell::a, 1), dyadic_round(0.1));
  EXPECT_NEAR(to_real(t).A(Cell::a, 1), 0.1, 1e-12);
}
