#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "macic/rational.hpp"
#include "macic/subsets.hpp"

namespace macic::det {

/// Symmetric linear deterministic two-cell channel. Every direct link has q
/// levels and each interfering user reaches the other receiver with n_cross
/// levels. Levels are indexed from the top; a transmit level l over a link of
/// strength n is received iff l < n, at receiver level (width - n + l), where
/// width = max(q, n_cross). Received words are XORs over GF(2).
struct Channel {
  int users_per_cell = 1;
  int q = 1;
  int n_cross = 0;

  int width() const { return q > n_cross ? q : n_cross; }
  /// Transmit vector length of user j (interferers may exceed q).
  int tx_length(int user) const { return user == 0 ? width() : q; }
  void validate() const;
};

/// Occupied transmit levels per user, indexed [cell][user].
struct Allocation {
  Channel channel;
  std::array<std::vector<std::vector<int>>, 2> levels;

  /// Normalized rate |levels| / q per user, indexed [cell][user].
  std::array<std::vector<Rational>, 2> achieved_gdof() const;
  Rational cell_sum(Cell c) const;
};

/// Superposition allocations for the symmetric channel with K users per cell:
/// alpha <= 1 - 1/K (interferer below the other receiver's floor), alpha = 1
/// (one block of q/(K+1) levels per user), alpha >= 1 + 1/K (interferer on its
/// top levels, decoded as strong interference). Throws std::invalid_argument
/// for an alpha outside these families or when alpha*q, q/K or q/(K+1) are not
/// integers.
Allocation build_allocation(int users_per_cell, const Rational& alpha, int q);

struct Collision {
  Cell receiver = Cell::a;
  std::vector<int> levels;  // receiver levels where unknowns are not separable
  std::string detail;
};

/// Left inverse of one receiver's GF(2) map from visible occupied levels to
/// received levels.
struct Decoder {
  Cell receiver = Cell::a;
  int width = 0;
  /// Unknowns as (cell, user, transmit level).
  std::vector<std::array<int, 3>> unknowns;
  /// rows[k] selects the received levels XOR-ed to recover unknown k.
  std::vector<std::vector<std::uint8_t>> rows;
};

/// Throws DecodingFailure when the allocation is not decodable at a receiver.
class DecodingFailure : public std::runtime_error {
 public:
  explicit DecodingFailure(Collision c);
  const Collision& collision() const { return collision_; }

 private:
  Collision collision_;
};

Decoder make_decoder(const Allocation& alloc, Cell receiver);

/// Per-use payload bits [cell][user][k] for the k-th occupied level.
using Payload = std::array<std::vector<std::vector<std::uint8_t>>, 2>;

/// Received words (width bits each) for one channel use.
std::array<std::vector<std::uint8_t>, 2> transmit(const Allocation& alloc, const Payload& payload);

/// Each receiver's estimate of its own users' payload.
Payload decode(const Allocation& alloc, const std::array<Decoder, 2>& decoders,
               const std::array<std::vector<std::uint8_t>, 2>& received);

struct SimulationReport {
  std::size_t uses = 0;
  std::size_t bits = 0;
  std::size_t bit_errors = 0;

  bool ok() const { return bit_errors == 0; }
};

/// Sends `uses` uniformly random payloads and counts decoding errors. Throws
/// DecodingFailure for a non-decodable allocation.
SimulationReport simulate(const Allocation& alloc, std::size_t uses, std::mt19937_64& rng);

/// Best symmetric cell sum when the interfering pair (symmetric GDoF d_ic as a
/// two-user interference channel) and the interference-free users time share:
/// fraction 1/(1+d_ic) of time to the interferers, giving 2 d_ic/(1+d_ic).
Rational timeshare_cell_sum(const Rational& d_ic);

}  // namespace macic::det
