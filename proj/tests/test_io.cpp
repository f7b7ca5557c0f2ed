#include <gtest/gtest.h>

#include "macic/io.hpp"
#include "macic/random.hpp"
#include "test_util.hpp"

using namespace macic;
using io::json;
using macic::test::R;

TEST(Io, RationalForms) {
  const json j = io::rational_json(R("1/3"));
  EXPECT_EQ(j.at("fraction"), "1/3");
  EXPECT_NEAR(j.at("decimal").get<double>(), 1.0 / 3, 1e-15);
  EXPECT_EQ(io::rational_from_json(j), R("1/3"));
  EXPECT_EQ(io::rational_from_json(json("2/4")), R("1/2"));
  EXPECT_EQ(io::rational_from_json(json(0.25)), R("1/4"));
  EXPECT_THROW(io::rational_from_json(json::array()), io::SchemaError);
}

TEST(Io, ChannelSchemas) {
  const auto a = io::channel_from_json(json::parse(
      R"({"Ka": 2, "Kb": 1, "snr_db": {"a": [20, 10], "b": [0]}, "inr_db": {"a0_to_b": 10, "b0_to_a": 0}})"));
  EXPECT_NEAR(a.snr(Cell::a, 0), 100, 1e-9);
  EXPECT_NEAR(a.inr_from(Cell::a), 10, 1e-9);
  const auto b = io::channel_from_json(json::parse(
      R"({"Ka": 1, "Kb": 1, "gain": {"a": [10], "b": [1]}, "power": {"a": [1], "b": [1]},
          "cross_gain": {"a0_to_b": 2, "b0_to_a": 1}})"));
  EXPECT_NEAR(b.snr(Cell::a, 0), 100, 1e-9);
  EXPECT_NEAR(b.inr_from(Cell::a), 4, 1e-9);
  const auto back = io::channel_from_json(io::channel_to_json(a));
  EXPECT_NEAR(back.snr(Cell::a, 1), 10, 1e-9);
  EXPECT_EQ(back.users(Cell::a), 2);
}

TEST(Io, ChannelSchemaErrors) {
  EXPECT_THROW(io::channel_from_json(json::parse(R"({"Ka": 1})")), io::SchemaError);
  // Ka disagrees with the SNR list.
  EXPECT_THROW(io::channel_from_json(json::parse(
                   R"({"Ka": 2, "Kb": 1, "snr_db": {"a": [20], "b": [0]}, "inr_db": {"a0_to_b": 1, "b0_to_a": 1}})")),
               io::SchemaError);
  EXPECT_THROW(io::channel_from_json(json::parse(R"([1, 2])")), io::SchemaError);
}

TEST(Io, PolytopeRoundTrip) {
  Polytope p(2, true);
  p.coordinate_names = {"R_a0", "R_b0"};
  p.add({R("1"), R("1/2")}, R("3/7"), "row");
  const json j = io::polytope_to_json(p);
  EXPECT_EQ(j.at("inequalities").at(0).at("rhs"), "3/7");
  const Polytope q = io::polytope_from_json(j);
  EXPECT_EQ(q.dim, 2u);
  EXPECT_EQ(q.inequalities.at(0).coeffs, p.inequalities[0].coeffs);
  EXPECT_EQ(q.inequalities.at(0).label, "row");
  EXPECT_TRUE(polytope_equal(p, q));
}

TEST(Io, TableRoundTrip) {
  rnd::Rng rng(1);
  const auto t = rnd::random_entropic_table(rng, 2, 1);
  const auto u = io::table_from_json(io::table_to_json(t));
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(t.users(c), domain(f), c)) EXPECT_EQ(u.get(f, c, m.bits), t.get(f, c, m.bits));
    }
  }
  EXPECT_THROW(io::table_from_json(json::parse(R"({"Ka": 1, "Kb": 1, "A": {"{a0}": "1"}})")), io::SchemaError);
}

TEST(Io, DmRoundTrip) {
  rnd::Rng rng(2);
  const auto [d, ch] = rnd::random_sd_instance(rng, 2, 1, 3);
  const auto d2 = io::distribution_from_json(io::distribution_to_json(d));
  EXPECT_EQ(d2.users, d.users);
  EXPECT_EQ(d2.p_q, d.p_q);
  EXPECT_EQ(d2.p_ux[0], d.p_ux[0]);
  const auto ch2 = io::sd_channel_from_json(io::sd_channel_to_json(ch));
  EXPECT_EQ(ch2.interference[1], ch.interference[1]);
  EXPECT_EQ(ch2.modulus, ch.modulus);
}

TEST(Io, SystemRoundTrip) {
  fme::LinearSystem s;
  s.var_names = {"x", "y"};
  s.nonneg = true;
  s.inequalities.push_back({{R("1"), R("-2")}, R("5/3"), "r"});
  const auto t = io::system_from_json(io::system_to_json(s));
  EXPECT_EQ(t.var_names, s.var_names);
  EXPECT_TRUE(t.nonneg);
  EXPECT_EQ(t.inequalities.at(0).rhs, R("5/3"));
}
