#include "macic/detmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace macic::det {

void Channel::validate() const {
  if (users_per_cell < 1 || users_per_cell > kMaxUsersPerCell) throw std::invalid_argument("det channel: bad user count");
  if (q < 1) throw std::invalid_argument("det channel: q must be positive");
  if (n_cross < 0) throw std::invalid_argument("det channel: n_cross must be nonnegative");
}

std::array<std::vector<Rational>, 2> Allocation::achieved_gdof() const {
  std::array<std::vector<Rational>, 2> d;
  for (Cell c : kCells) {
    for (const auto& l : levels[index(c)]) d[index(c)].push_back(make_rational(static_cast<long>(l.size()), channel.q));
  }
  return d;
}

Rational Allocation::cell_sum(Cell c) const {
  Rational s = 0;
  const auto d = achieved_gdof();
  for (const auto& x : d[index(c)]) s += x;
  return s;
}

namespace {

std::vector<int> range(int from, int count) {
  std::vector<int> r(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) r[static_cast<std::size_t>(k)] = from + k;
  return r;
}

int exact_int(const Rational& x, const char* what) {
  if (x.get_den() != 1) throw std::invalid_argument(std::string("build_allocation: ") + what + " is not an integer");
  return static_cast<int>(x.get_num().get_si());
}

}  // namespace

Allocation build_allocation(int users_per_cell, const Rational& alpha, int q) {
  if (alpha < 0) throw std::invalid_argument("build_allocation: alpha must be nonnegative");
  if (users_per_cell < 1) throw std::invalid_argument("build_allocation: K must be at least 1");
  const int k = users_per_cell;
  Allocation a;
  a.channel = {k, q, exact_int(alpha * q, "alpha * q")};
  a.channel.validate();
  const Rational inv_k = make_rational(1, k);

  if (alpha <= 1 - inv_k || alpha >= 1 + inv_k) {
    const int chunk = exact_int(make_rational(q, k), "q / K");
    const bool weak = alpha <= 1 - inv_k;
    for (Cell c : kCells) {
      auto& lv = a.levels[index(c)];
      if (weak) {
        // Interferer on the bottom chunk, which falls below the other floor.
        lv.push_back(range(q - chunk, chunk));
        for (int j = 1; j < k; ++j) lv.push_back(range((j - 1) * chunk, chunk));
      } else {
        // Interferer on its top chunk, received above the other cell's signal.
        lv.push_back(range(0, chunk));
        for (int j = 1; j < k; ++j) lv.push_back(range(j * chunk, chunk));
      }
    }
    return a;
  }
  if (alpha == 1) {
    const int m = exact_int(make_rational(q, k + 1), "q / (K+1)");
    a.levels[0].push_back(range(0, m));
    a.levels[1].push_back(range(k * m, m));
    for (Cell c : kCells) {
      for (int j = 1; j < k; ++j) a.levels[index(c)].push_back(range(j * m, m));
    }
    return a;
  }
  throw std::invalid_argument("build_allocation: no construction for alpha = " + to_fraction_string(alpha) +
                              " with K = " + std::to_string(k));
}

DecodingFailure::DecodingFailure(Collision c)
    : std::runtime_error("decoding failure at receiver " + std::string(1, name(c.receiver)) + ": " + c.detail),
      collision_(std::move(c)) {}

namespace {

// Receiver level of transmit level l over a link of strength n, or -1.
int landing(const Channel& ch, int n, int l) { return l < n ? ch.width() - n + l : -1; }

}  // namespace

Decoder make_decoder(const Allocation& alloc, Cell receiver) {
  const Channel& ch = alloc.channel;
  Decoder d;
  d.receiver = receiver;
  d.width = ch.width();
  std::vector<int> land;
  for (std::size_t j = 0; j < alloc.levels[index(receiver)].size(); ++j) {
    for (int l : alloc.levels[index(receiver)][j]) {
      d.unknowns.push_back({index(receiver), static_cast<int>(j), l});
      land.push_back(landing(ch, ch.q, l));
    }
  }
  const std::size_t own = d.unknowns.size();
  const Cell o = other(receiver);
  if (!alloc.levels[index(o)].empty()) {
    for (int l : alloc.levels[index(o)][0]) {
      const int y = landing(ch, ch.n_cross, l);
      if (y < 0) continue;
      d.unknowns.push_back({index(o), 0, l});
      land.push_back(y);
    }
  }

  // Each unknown hits exactly one received level, so the map is a 0/1 matrix
  // with one nonzero per column; solve generally anyway.
  const std::size_t n = d.unknowns.size();
  const std::size_t w = static_cast<std::size_t>(d.width);
  // Augmented [M | I_w] row-reduced to find a left inverse of M (w x n).
  std::vector<std::vector<std::uint8_t>> m(w, std::vector<std::uint8_t>(n + w, 0));
  for (std::size_t k = 0; k < n; ++k) {
    if (land[k] < 0) {
      Collision c{receiver, {}, "own level " + std::to_string(d.unknowns[k][2]) + " is below the floor"};
      throw DecodingFailure(c);
    }
    m[static_cast<std::size_t>(land[k])][k] ^= 1;
  }
  for (std::size_t r = 0; r < w; ++r) m[r][n + r] = 1;
  std::vector<std::size_t> pivot_row(n, w);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < w; ++col) {
    std::size_t p = row;
    while (p < w && !m[p][col]) ++p;
    if (p == w) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < w; ++r) {
      if (r != row && m[r][col]) {
        for (std::size_t c = 0; c < n + w; ++c) m[r][c] ^= m[row][c];
      }
    }
    pivot_row[col] = row++;
  }
  std::vector<int> bad;
  for (std::size_t k = 0; k < n; ++k) {
    if (pivot_row[k] == w) bad.push_back(land[k]);
  }
  if (!bad.empty()) {
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    std::string s = "colliding receiver levels";
    for (int b : bad) s += " " + std::to_string(b);
    throw DecodingFailure(Collision{receiver, bad, s});
  }
  // Own unknowns only are needed; interference is resolved but discarded.
  for (std::size_t k = 0; k < own; ++k) {
    d.rows.emplace_back(m[pivot_row[k]].begin() + static_cast<std::ptrdiff_t>(n), m[pivot_row[k]].end());
  }
  d.unknowns.resize(own);
  return d;
}

std::array<std::vector<std::uint8_t>, 2> transmit(const Allocation& alloc, const Payload& payload) {
  const Channel& ch = alloc.channel;
  std::array<std::vector<std::uint8_t>, 2> y;
  for (Cell r : kCells) {
    auto& out = y[index(r)];
    out.assign(static_cast<std::size_t>(ch.width()), 0);
    for (Cell c : kCells) {
      const auto& lv = alloc.levels[index(c)];
      for (std::size_t j = 0; j < lv.size(); ++j) {
        if (c != r && j != 0) continue;  // only user 0 crosses over
        const int n = c == r ? ch.q : ch.n_cross;
        for (std::size_t k = 0; k < lv[j].size(); ++k) {
          const int at = landing(ch, n, lv[j][k]);
          if (at >= 0) out[static_cast<std::size_t>(at)] ^= payload[index(c)][j][k];
        }
      }
    }
  }
  return y;
}

Payload decode(const Allocation& alloc, const std::array<Decoder, 2>& decoders,
               const std::array<std::vector<std::uint8_t>, 2>& received) {
  Payload out;
  for (Cell c : kCells) {
    const auto& lv = alloc.levels[index(c)];
    out[index(c)].resize(lv.size());
    for (std::size_t j = 0; j < lv.size(); ++j) out[index(c)][j].assign(lv[j].size(), 0);
    const Decoder& d = decoders[index(c)];
    for (std::size_t k = 0; k < d.unknowns.size(); ++k) {
      std::uint8_t bit = 0;
      for (std::size_t r = 0; r < d.rows[k].size(); ++r) bit ^= static_cast<std::uint8_t>(d.rows[k][r] & received[index(c)][r]);
      const auto& u = d.unknowns[k];
      const auto& levels = lv[static_cast<std::size_t>(u[1])];
      const auto pos = std::find(levels.begin(), levels.end(), u[2]) - levels.begin();
      out[index(c)][static_cast<std::size_t>(u[1])][static_cast<std::size_t>(pos)] = bit;
    }
  }
  return out;
}

SimulationReport simulate(const Allocation& alloc, std::size_t uses, std::mt19937_64& rng) {
  const std::array<Decoder, 2> decoders{make_decoder(alloc, Cell::a), make_decoder(alloc, Cell::b)};
  SimulationReport rep;
  rep.uses = uses;
  std::bernoulli_distribution coin(0.5);
  Payload p;
  for (Cell c : kCells) {
    for (const auto& l : alloc.levels[index(c)]) p[index(c)].emplace_back(l.size(), 0);
  }
  for (std::size_t t = 0; t < uses; ++t) {
    for (auto& cell : p)
      for (auto& user : cell)
        for (auto& b : user) b = coin(rng) ? 1 : 0;
    const Payload got = decode(alloc, decoders, transmit(alloc, p));
    for (Cell c : kCells) {
      for (std::size_t j = 0; j < p[index(c)].size(); ++j) {
        for (std::size_t k = 0; k < p[index(c)][j].size(); ++k) {
          ++rep.bits;
          if (got[index(c)][j][k] != p[index(c)][j][k]) ++rep.bit_errors;
        }
      }
    }
  }
  return rep;
}

Rational timeshare_cell_sum(const Rational& d_ic) {
  if (d_ic < 0) throw std::invalid_argument("timeshare_cell_sum: negative GDoF");
  // Interferers active for a fraction tau at rate d_ic each, the other users
  // for 1 - tau at full rate; the symmetric point has tau * d_ic = 1 - tau.
  const Rational tau = 1 / (1 + d_ic);
  const Rational per_user = tau * d_ic;
  return 2 * per_user;
}

}  // namespace macic::det
