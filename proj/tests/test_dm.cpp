#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "macic/dmeval.hpp"
#include "macic/pmf.hpp"
#include "macic/random.hpp"
#include "test_util.hpp"

using namespace macic;
using macic::test::R;

namespace {

double h(const std::map<std::vector<int>, double>& law) {
  double s = 0;
  for (const auto& [k, p] : law) {
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

std::vector<Rational> uniform(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), make_rational(1, n)); }

// Single-q law with independent inputs and no auxiliary information.
dm::Distribution plain(int ka, int kb, int x, std::vector<Rational> pa, std::vector<Rational> pb) {
  dm::Distribution d;
  d.users = {ka, kb};
  d.x_size = {x, x};
  d.u_size = {1, 1};
  d.p_q = {Rational(1)};
  d.p_ux[0] = {std::move(pa)};
  d.p_ux[1] = {std::move(pb)};
  return d;
}

dm::SdChannel channel(int x, int s, int m, std::vector<std::vector<Rational>> law_a,
                      std::vector<std::vector<Rational>> law_b) {
  dm::SdChannel ch;
  ch.x_size = {x, x};
  ch.s_size = {s, s};
  ch.modulus = {m, m};
  ch.interference = {std::move(law_a), std::move(law_b)};
  return ch;
}

// S = X0 xor N with P(N = 1) = eps.
std::vector<std::vector<Rational>> bsc(const Rational& eps) {
  return {{1 - eps, eps}, {eps, 1 - eps}};
}

std::vector<std::vector<Rational>> identity_law() { return bsc(0); }

// Merges the auxiliary alphabet into a constant.
dm::Distribution without_aux(dm::Distribution d) {
  for (Cell c : kCells) {
    const int i = index(c);
    const std::size_t nx = static_cast<std::size_t>(d.x_states(c));
    for (auto& row : d.p_ux[i]) {
      std::vector<Rational> merged(nx, Rational(0));
      for (std::size_t k = 0; k < row.size(); ++k) merged[k % nx] += row[k];
      row = merged;
    }
    d.u_size[i] = 1;
  }
  return d;
}

void expect_chain_rule(const RealSetFunctionTable& t) {
  for (Cell c : kCells) {
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::upsilon, c)) {
      EXPECT_LE(t.A(c, m.bits), t.E(c, m.bits) + 1e-9);
      EXPECT_GE(t.A(c, m.bits), -1e-9);
    }
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::omega, c)) {
      EXPECT_LE(t.B(c, m.bits), t.G(c, m.bits) + 1e-9);
      EXPECT_GE(t.B(c, m.bits), -1e-9);
    }
  }
}

}  // namespace

TEST(Pmf, EntropyBits) {
  EXPECT_DOUBLE_EQ(entropy_bits(uniform(4)), 2);
  EXPECT_DOUBLE_EQ(entropy_bits({Rational(1), Rational(0)}), 0);
  EXPECT_NEAR(entropy_bits({R("1/4"), R("3/4")}), binary_entropy(0.25), 1e-12);
}

TEST(Pmf, MatchesNaiveEnumeration) {
  rnd::Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    JointPmf pmf({"X", "Y", "Z"}, {2, 3, 2});
    const auto p = rnd::random_pmf(rng, 12);
    std::map<std::vector<int>, double> joint;
    for (int k = 0; k < 12; ++k) {
      const std::vector<int> o{k / 6, (k / 2) % 3, k % 2};
      pmf.add(o, p[static_cast<std::size_t>(k)]);
      joint[o] += p[static_cast<std::size_t>(k)].get_d();
    }
    pmf.require_normalized();
    auto marg = [&](std::vector<int> keep) {
      std::map<std::vector<int>, double> m;
      for (const auto& [o, q] : joint) {
        std::vector<int> key;
        for (int v : keep) key.push_back(o[static_cast<std::size_t>(v)]);
        m[key] += q;
      }
      return h(m);
    };
    const auto X = pmf.set({"X"}), Y = pmf.set({"Y"}), Z = pmf.set({"Z"});
    EXPECT_NEAR(pmf.entropy(X | Y | Z), marg({0, 1, 2}), 1e-12);
    EXPECT_NEAR(pmf.entropy(Y), marg({1}), 1e-12);
    EXPECT_NEAR(pmf.entropy(X, Z), marg({0, 2}) - marg({2}), 1e-12);
    EXPECT_NEAR(pmf.mutual_information(X, Y, Z), marg({0, 2}) + marg({1, 2}) - marg({0, 1, 2}) - marg({2}), 1e-12);
    EXPECT_EQ(pmf.entropy(0), 0);
  }
}

TEST(Pmf, RejectsBadInput) {
  JointPmf pmf({"X"}, {2});
  pmf.add({0}, R("1/2"));
  EXPECT_THROW(pmf.require_normalized(), std::invalid_argument);
  EXPECT_THROW(pmf.add({2}, R("1/2")), std::invalid_argument);
  EXPECT_THROW(pmf.var("nope"), std::invalid_argument);
  pmf.add({0}, R("1/2"));
  EXPECT_EQ(pmf.support_size(), 1u);
  EXPECT_EQ(pmf.total(), 1);
}

TEST(DmInner, XorReceiverSeesOneBit) {
  const auto d = plain(2, 1, 2, uniform(4), uniform(2));
  const auto ch = channel(2, 1, 2, {{1}, {1}}, {{1}, {1}});
  const auto t = dm::dm_inner_table(d, ch);
  EXPECT_NEAR(t.B(Cell::a, 0b11), 1, 1e-12);
  EXPECT_NEAR(t.B(Cell::a, 0b01), 1, 1e-12);
  EXPECT_NEAR(t.G(Cell::b, 0b1), 1, 1e-12);
}

TEST(DmInner, FullCommonMessageLeavesNothingPrivate) {
  // U_a0 = X_a0; code = u * 4 + x0 * 2 + x1.
  dm::Distribution d = plain(2, 1, 2, {}, uniform(2));
  d.u_size[0] = 2;
  d.p_ux[0] = {std::vector<Rational>(8, Rational(0))};
  for (int x0 = 0; x0 < 2; ++x0) {
    for (int x1 = 0; x1 < 2; ++x1) d.p_ux[0][0][static_cast<std::size_t>(x0 * 4 + x0 * 2 + x1)] = R("1/4");
  }
  const auto ch = channel(2, 1, 2, {{1}, {1}}, {{1}, {1}});
  const auto t = dm::dm_inner_table(d, ch);
  EXPECT_NEAR(t.A(Cell::a, 0b01), 0, 1e-12);
  EXPECT_NEAR(t.A(Cell::a, 0b11), 1, 1e-12);
}

TEST(DmInner, ConstantAuxiliaryMakesAEqualB) {
  rnd::Rng rng(3);
  for (int i = 0; i < 5; ++i) {
    const auto [d0, ch] = rnd::random_sd_instance(rng, 1 + i % 2, 2, 2);
    const auto t = dm::dm_inner_table(without_aux(d0), ch);
    for (Cell c : kCells) {
      for (const auto& m : enum_subsets(t.users(c), SubsetKind::upsilon, c)) {
        EXPECT_NEAR(t.A(c, m.bits), t.B(c, m.bits), 1e-9);
      }
    }
  }
}

TEST(SdOuter, MatchesEntropyOracle) {
  // Ka = Kb = 1, Y_a = X_a0 + S_b mod 2, S_b = X_b0 xor N with P(N=1) = 1/4.
  const std::vector<Rational> pa{R("1/3"), R("2/3")}, pb{R("3/5"), R("2/5")};
  const auto d = plain(1, 1, 2, pa, pb);
  const auto ch = channel(2, 2, 2, bsc(R("1/4")), bsc(R("1/4")));
  const auto outer = dm::sd_outer_table(d, ch);
  const auto inner = dm::dm_inner_table(d, ch);

  std::map<std::vector<int>, double> y_xb, xb, y, s_xb, y_xa;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int s = 0; s < 2; ++s) {
        const double p = pa[a].get_d() * pb[b].get_d() * (s == b ? 0.75 : 0.25);
        const int out = (a + s) % 2;
        y_xb[{out, b}] += p;
        xb[{b}] += p;
        y[{out}] += p;
        s_xb[{s, b}] += p;
        y_xa[{out, a}] += p;
      }
    }
  }
  std::map<std::vector<int>, double> xa{{{0}, pa[0].get_d()}, {{1}, pa[1].get_d()}};
  const double noise = h(s_xb) - h(xb);
  EXPECT_NEAR(outer.B(Cell::a, 1), h(y_xb) - h(xb) - noise, 1e-12);
  EXPECT_NEAR(outer.G(Cell::a, 1), h(y) - noise, 1e-12);
  EXPECT_NEAR(inner.B(Cell::a, 1), h(y) - (h(y_xa) - h(xa)), 1e-12);
}

TEST(SdOuter, DeterministicInterferenceMakesGenieExact) {
  const auto d = plain(1, 2, 2, uniform(2), uniform(4));
  const auto ch = channel(2, 2, 2, identity_law(), identity_law());
  const auto pmf = dm::outer_joint(d, ch);
  EXPECT_NEAR(pmf.entropy(pmf.set({"S_a"}), pmf.set({"T_a"})), 0, 1e-12);
  const auto s = dm::sd_gap_shift(d, ch);
  EXPECT_NEAR(s.on_rates_a, 0, 1e-12);
  EXPECT_NEAR(s.on_rates_b, 0, 1e-12);
  const auto r = dm::verify_containment(d, ch);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.outer_vertices, 0u);
}

TEST(SdOuter, GenieCopyHasSameConditionalEntropy) {
  rnd::Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto [d, ch] = rnd::random_sd_instance(rng, 1 + i % 2, 1 + (i / 2) % 2, 2 + i % 2);
    const auto pmf = dm::outer_joint(d, ch);
    for (const char* c : {"a", "b"}) {
      const std::string s = std::string("S_") + c, t = std::string("T_") + c, x = std::string("X_") + c + "0";
      EXPECT_NEAR(pmf.entropy(pmf.set({t}), pmf.set({x})), pmf.entropy(pmf.set({s}), pmf.set({x})), 1e-12);
    }
  }
}

TEST(Shift, BinarySymmetricInterference) {
  const Rational eps = R("1/5");
  const auto d = plain(1, 1, 2, uniform(2), uniform(2));
  const auto ch = channel(2, 2, 2, bsc(eps), bsc(eps));
  // I(X; S | T) = H(S, T) - H(T) - h(eps) with S, T independent BSC(eps) outputs of uniform X.
  const double e = eps.get_d();
  const double same = 0.5 * ((1 - e) * (1 - e) + e * e), diff = 0.5 * 2 * e * (1 - e);
  const double h_st = h({{{0, 0}, same}, {{1, 1}, same}, {{0, 1}, diff}, {{1, 0}, diff}});
  const double expected = h_st - 1 - binary_entropy(e);
  const auto s = dm::sd_gap_shift(d, ch);
  EXPECT_NEAR(s.on_rates_a, expected, 1e-12);
  EXPECT_NEAR(s.on_rates_b, expected, 1e-12);
  EXPECT_GT(expected, 0);
}

TEST(Containment, TablesObeyChainRuleOnRandomInstances) {
  rnd::Rng rng(6);
  for (int i = 0; i < 12; ++i) {
    const auto [d, ch] = rnd::random_sd_instance(rng, 1 + i % 2, 1 + (i / 2) % 2, 2 + (i / 4) % 2);
    expect_chain_rule(dm::dm_inner_table(d, ch));
    expect_chain_rule(dm::sd_outer_table(d, ch));
    expect_chain_rule(dm::dm_inner_table(dm::with_genie_auxiliaries(d, ch), ch));
    EXPECT_TRUE(dm::inclusion_chain_violations(d, ch).empty()) << i;
    const auto r = dm::verify_containment(d, ch, 1e-6, false);
    EXPECT_TRUE(r.ok()) << i;
    EXPECT_TRUE(r.table_violations.empty());
  }
}

TEST(Validation, RejectsBadShapes) {
  auto d = plain(1, 1, 2, uniform(2), uniform(2));
  d.p_ux[0][0] = uniform(3);
  EXPECT_THROW(d.validate(), std::invalid_argument);
  // Two interference values collapse onto one output: not invertible.
  const auto ch = channel(2, 3, 2, {uniform(3), uniform(3)}, {uniform(3), uniform(3)});
  EXPECT_THROW(ch.validate(1, 1), std::invalid_argument);
}
