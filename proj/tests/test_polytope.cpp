#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "macic/gaussian.hpp"
#include "macic/lp.hpp"
#include "macic/polytope.hpp"
#include "macic/region.hpp"
#include "test_util.hpp"

using namespace macic;
using macic::test::make_polytope;
using macic::test::naive_member;
using macic::test::R;
using macic::test::Rs;

namespace {

Polytope unit_square() { return make_polytope(2, true, {{{1, 0}, 1}, {{0, 1}, 1}}); }
Polytope unit_triangle() { return make_polytope(2, true, {{{1, 1}, 1}}); }

// Solves the square system M x = b by Gauss-Jordan; false when singular.
bool solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return true;
}

// Vertices by intersecting every dim-subset of constraint rows.
std::set<std::vector<Rational>> brute_vertices(const Polytope& p) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& q : p.inequalities) {
    rows.push_back(q.coeffs);
    rhs.push_back(q.rhs);
  }
  if (p.nonneg) {
    for (std::size_t j = 0; j < p.dim; ++j) {
      std::vector<Rational> r(p.dim, Rational(0));
      r[j] = -1;
      rows.push_back(r);
      rhs.emplace_back(0);
    }
  }
  std::set<std::vector<Rational>> out;
  std::vector<bool> pick(rows.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(p.dim), true);
  do {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> b;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (pick[k]) {
        m.push_back(rows[k]);
        b.push_back(rhs[k]);
      }
    }
    std::vector<Rational> x;
    if (solve(m, b, x) && naive_member(p, x)) out.insert(x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::set<std::vector<Rational>> as_set(const std::vector<RatePoint>& v) { return {v.begin(), v.end()}; }

// Random polytope in [0, 3]^dim with coefficients in {-1, 0, 1} and integer rhs.
Polytope random_boxed(std::mt19937_64& rng, std::size_t dim, int extra_rows) {
  std::uniform_int_distribution<int> coef(-1, 1), rhs(0, 4);
  Polytope p(dim, true);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rational> c(dim, Rational(0));
    c[j] = 1;
    p.add(c, Rational(3));
  }
  for (int k = 0; k < extra_rows; ++k) {
    std::vector<Rational> c(dim);
    for (auto& x : c) x = coef(rng);
    p.add(c, Rational(rhs(rng)));
  }
  return p;
}

}  // namespace

TEST(Lp, SmallProgram) {
  // max x + y s.t. x <= 2, y <= 3, x + y <= 4
  std::vector<std::vector<Rational>> rows{Rs({"1", "0"}), Rs({"0", "1"}), Rs({"1", "1"})};
  const auto rhs = Rs({"2", "3", "4"});
  const auto obj = Rs({"1", "1"});
  const auto r = lp::maximize(rows, rhs, obj);
  ASSERT_EQ(r.status, lp::Status::optimal);
  EXPECT_EQ(r.value, 4);
  // Multipliers certify the bound.
  Rational dual = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_GE(r.multipliers[k], 0);
    dual += r.multipliers[k] * rhs[k];
  }
  EXPECT_EQ(dual, 4);
}

TEST(Lp, UnboundedAndInfeasible) {
  std::vector<std::vector<Rational>> rows{Rs({"-1"})};
  EXPECT_EQ(lp::maximize(rows, Rs({"0"}), Rs({"1"})).status, lp::Status::unbounded);
  std::vector<std::vector<Rational>> bad{Rs({"1"}), Rs({"-1"})};
  EXPECT_EQ(lp::maximize(bad, Rs({"0", "-1"}), Rs({"1"})).status, lp::Status::infeasible);
  EXPECT_FALSE(lp::feasible(bad, Rs({"0", "-1"}), 1));
}

TEST(Polytope, Contains) {
  EXPECT_TRUE(contains(unit_square(), Rs({"1/2", "1/2"})));
  EXPECT_FALSE(contains(unit_square(), Rs({"1", "2"})));
  EXPECT_TRUE(contains(unit_triangle(), Rs({"1/3", "2/3"})));
  EXPECT_FALSE(contains(unit_triangle(), Rs({"-1/3", "1/3"})));
  EXPECT_THROW(contains(unit_square(), Rs({"1"})), DimensionMismatch);
}

TEST(Polytope, Implication) {
  EXPECT_TRUE(implies(unit_square(), {Rs({"1", "1"}), R("2"), ""}));
  EXPECT_FALSE(implies(unit_square(), {Rs({"1", "1"}), R("1"), ""}));
  EXPECT_TRUE(implies(make_polytope(1, true, {{{1}, 1}}), {Rs({"2"}), R("3"), ""}));

  const LinearInequality q{Rs({"1", "1"}), R("2"), ""};
  const auto r = check_implication(unit_square(), q);
  ASSERT_EQ(r.verdict, Implication::implied);
  EXPECT_TRUE(verify_certificate(unit_square(), q, r.certificate));
}

TEST(Polytope, ImplicationMatchesVertexScan) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-2, 2), rhs(-1, 6);
  for (int t = 0; t < 40; ++t) {
    const Polytope p = random_boxed(rng, 2, 3);
    if (is_empty(p)) continue;
    const LinearInequality q{{Rational(coef(rng)), Rational(coef(rng))}, Rational(rhs(rng)), ""};
    Rational best = -1000;
    for (const auto& v : brute_vertices(p)) best = std::max(best, Rational(q.coeffs[0] * v[0] + q.coeffs[1] * v[1]));
    EXPECT_EQ(implies(p, q), best <= q.rhs) << t;
  }
}

TEST(Polytope, Equality) {
  Polytope dup = unit_square();
  dup.add(Rs({"1", "0"}), R("1"));
  EXPECT_TRUE(polytope_equal(unit_square(), dup));
  EXPECT_FALSE(polytope_equal(unit_square(), unit_triangle()));
}

TEST(Polytope, EqualityAgreesWithGridOracle) {
  // Coefficients in {-1,0,1} and integer rhs keep every vertex on the 1/12 grid
  // for dim <= 3, so two polytopes differ iff some grid point separates them.
  std::mt19937_64 rng(3);
  int equal_seen = 0, differ_seen = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 2 + static_cast<std::size_t>(t % 2);
    Polytope p = random_boxed(rng, dim, 2);
    Polytope q = p;
    if (t % 3 == 0) {
      // Redundant sum of two rows keeps the set.
      LinearInequality s = q.inequalities[0];
      for (std::size_t j = 0; j < dim; ++j) s.coeffs[j] += q.inequalities.back().coeffs[j];
      s.rhs += q.inequalities.back().rhs;
      q.add(s);
    } else {
      q.inequalities.back().rhs += 1;
    }
    bool grid_equal = true;
    for (const auto& x : test::grid_points(dim, R("0"), R("3"), R("1/12"))) {
      if (naive_member(p, x) != naive_member(q, x)) {
        grid_equal = false;
        break;
      }
    }
    EXPECT_EQ(polytope_equal(p, q), grid_equal) << t;
    (grid_equal ? equal_seen : differ_seen)++;
  }
  EXPECT_GT(equal_seen, 0);
  EXPECT_GT(differ_seen, 0);
}

TEST(Vertices, SmallExamples) {
  EXPECT_EQ(as_set(enumerate_vertices(unit_square())),
            (std::set<std::vector<Rational>>{Rs({"0", "0"}), Rs({"1", "0"}), Rs({"0", "1"}), Rs({"1", "1"})}));
  EXPECT_EQ(as_set(enumerate_vertices(unit_triangle())),
            (std::set<std::vector<Rational>>{Rs({"0", "0"}), Rs({"1", "0"}), Rs({"0", "1"})}));
}

TEST(Vertices, GaussianOuterRegionMatchesActiveSetEnumeration) {
  const auto ch = gaussian::Channel::from_db({20}, {15}, 12, 8);
  const Polytope p = build_generic_region(rationalize(gaussian::outer_table(ch)));
  EXPECT_EQ(as_set(enumerate_vertices(p)), brute_vertices(p));
}

TEST(Vertices, RandomThreeDimensional) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    const Polytope p = random_boxed(rng, 3, 3);
    EXPECT_EQ(as_set(enumerate_vertices(p)), brute_vertices(p)) << t;
  }
}
