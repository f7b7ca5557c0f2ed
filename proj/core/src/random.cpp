#include "macic/random.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace macic::rnd {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Rank over GF(2) of rows given as bitmasks.
int rank(std::vector<std::uint64_t> rows) {
  int r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t m = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + r, rows.end(), [m](std::uint64_t x) { return x & m; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r, it);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != static_cast<std::size_t>(r) && (rows[k] & m)) rows[k] ^= rows[static_cast<std::size_t>(r)];
    }
    ++r;
  }
  return r;
}

using Rows = std::vector<std::uint64_t>;

Rows join(std::initializer_list<const Rows*> parts) {
  Rows out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// I(A; B | Z) for linear functions of independent uniform bits.
int mi(const Rows& a, const Rows& b, const Rows& z) {
  return rank(join({&a, &z})) + rank(join({&b, &z})) - rank(join({&a, &b, &z})) - rank(z);
}

struct LinearModel {
  std::array<std::vector<Rows>, 2> x;  // unit rows per user
  std::array<Rows, 2> u;
  std::array<Rows, 2> y;
};

std::uint64_t random_combination(Rng& rng, const Rows& basis) {
  std::uint64_t v = 0;
  while (v == 0) {
    for (auto b : basis) {
      if (uniform_int(rng, 0, 1)) v ^= b;
    }
  }
  return v;
}

LinearModel random_model(Rng& rng, const std::array<int, 2>& users) {
  LinearModel m;
  int next = 0;
  for (Cell c : kCells) {
    for (int j = 0; j < users[index(c)]; ++j) {
      Rows bits;
      for (int n = uniform_int(rng, 1, 3); n > 0; --n) bits.push_back(std::uint64_t{1} << next++);
      m.x[index(c)].push_back(std::move(bits));
    }
  }
  for (Cell c : kCells) {
    const Rows& x0 = m.x[index(c)][0];
    for (int r = uniform_int(rng, 0, static_cast<int>(x0.size())); r > 0; --r) m.u[index(c)].push_back(random_combination(rng, x0));
  }
  for (Cell c : kCells) {
    Rows visible;
    for (const auto& b : m.x[index(c)]) visible.insert(visible.end(), b.begin(), b.end());
    visible.insert(visible.end(), m.x[index(other(c))][0].begin(), m.x[index(other(c))][0].end());
    for (int r = uniform_int(rng, 1, 4); r > 0; --r) m.y[index(c)].push_back(random_combination(rng, visible));
  }
  return m;
}

Rows inputs(const LinearModel& m, Cell c, std::uint32_t mask) {
  Rows out;
  for (std::size_t j = 0; j < m.x[index(c)].size(); ++j) {
    if ((mask >> j) & 1U) out.insert(out.end(), m.x[index(c)][j].begin(), m.x[index(c)][j].end());
  }
  return out;
}

}  // namespace

std::vector<Rational> random_pmf(Rng& rng, int n, int max_den) {
  if (n < 1) throw std::invalid_argument("random_pmf: n must be positive");
  const int den = uniform_int(rng, std::min(n, max_den), std::max(n, max_den));
  std::vector<long> counts(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < den; ++k) ++counts[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))];
  std::vector<Rational> p;
  for (long c : counts) p.push_back(make_rational(c, den));
  return p;
}

gaussian::Channel random_gaussian_channel(Rng& rng, int max_users, double db_lo, double db_hi) {
  std::uniform_real_distribution<double> db(db_lo, db_hi);
  std::array<std::vector<double>, 2> snr;
  for (auto& s : snr) {
    for (int k = uniform_int(rng, 1, max_users); k > 0; --k) s.push_back(db(rng));
  }
  const double inr_ab = db(rng);
  const double inr_ba = db(rng);
  return gaussian::Channel::from_db(snr[0], snr[1], inr_ab, inr_ba);
}

SetFunctionTable random_entropic_table(Rng& rng, int users_a, int users_b) {
  const std::array<int, 2> users{users_a, users_b};
  const auto weights = random_pmf(rng, uniform_int(rng, 1, 3), 16);
  SetFunctionTable t(users_a, users_b);
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(users[index(c)], domain(f), c)) t.set(f, c, m.bits, Rational(0));
    }
  }
  for (const auto& w : weights) {
    const LinearModel m = random_model(rng, users);
    if (w == 0) continue;
    for (Cell c : kCells) {
      const Cell o = other(c);
      const std::uint32_t full = (1U << users[index(c)]) - 1;
      const Rows& y = m.y[index(c)];
      const Rows& u_own = m.u[index(c)];
      const Rows& u_other = m.u[index(o)];
      for (const auto& s : enum_subsets(users[index(c)], SubsetKind::upsilon, c)) {
        const Rows x = inputs(m, c, s.bits);
        const Rows rest = inputs(m, c, full & ~s.bits);
        const int a = mi(x, y, join({&rest, &u_own, &u_other}));
        const int e = mi(join({&x, &u_other}), y, join({&rest, &u_own}));
        t.set(SetFn::A, c, s.bits, t.A(c, s.bits) + w * a);
        t.set(SetFn::E, c, s.bits, t.E(c, s.bits) + w * e);
      }
      for (const auto& s : enum_subsets(users[index(c)], SubsetKind::omega, c)) {
        const Rows x = inputs(m, c, s.bits);
        const Rows rest = inputs(m, c, full & ~s.bits);
        const int b = mi(x, y, join({&rest, &u_other}));
        const int g = mi(join({&x, &u_other}), y, rest);
        t.set(SetFn::B, c, s.bits, t.B(c, s.bits) + w * b);
        t.set(SetFn::G, c, s.bits, t.G(c, s.bits) + w * g);
      }
    }
  }
  return t;
}

SetFunctionTable random_box_table(Rng& rng, int users_a, int users_b, int den, int max_value) {
  SetFunctionTable t(users_a, users_b);
  auto draw = [&](int lo) { return make_rational(uniform_int(rng, lo, max_value * den), den); };
  for (Cell c : kCells) {
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::upsilon, c)) {
      const Rational a = draw(0);
      t.set(SetFn::A, c, m.bits, a);
      t.set(SetFn::E, c, m.bits, a + draw(0));
    }
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::omega, c)) {
      const Rational b = draw(0);
      t.set(SetFn::B, c, m.bits, b);
      t.set(SetFn::G, c, m.bits, b + draw(0));
    }
  }
  return t;
}

std::pair<dm::Distribution, dm::SdChannel> random_sd_instance(Rng& rng, int users_a, int users_b, int alphabet) {
  if (alphabet < 2) throw std::invalid_argument("random_sd_instance: alphabet must be at least 2");
  dm::Distribution d;
  d.users = {users_a, users_b};
  d.x_size = {alphabet, alphabet};
  d.u_size = {1, 1};
  d.p_q = random_pmf(rng, uniform_int(rng, 1, 2));
  for (Cell c : kCells) {
    for (std::size_t q = 0; q < d.p_q.size(); ++q) d.p_ux[index(c)].push_back(random_pmf(rng, d.x_states(c)));
  }
  dm::SdChannel ch;
  ch.x_size = {alphabet, alphabet};
  ch.s_size = {alphabet, alphabet};
  ch.modulus = {alphabet, alphabet};
  for (Cell c : kCells) {
    for (int x = 0; x < alphabet; ++x) ch.interference[index(c)].push_back(random_pmf(rng, alphabet));
  }
  return {std::move(d), std::move(ch)};
}

}  // namespace macic::rnd
