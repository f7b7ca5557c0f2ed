#pragma once

#include <random>
#include <utility>
#include <vector>

#include "macic/dmeval.hpp"
#include "macic/gaussian.hpp"
#include "macic/set_function_table.hpp"

namespace macic::rnd {

using Rng = std::mt19937_64;

/// Rational pmf of length n whose denominator is at most max_den (at least n):
/// D unit masses thrown into n bins. Zeros are allowed.
std::vector<Rational> random_pmf(Rng& rng, int n, int max_den = 64);

/// Users per cell uniform in [1, max_users]; SNRs and INRs uniform in dB.
gaussian::Channel random_gaussian_channel(Rng& rng, int max_users, double db_lo = -10, double db_hi = 60);

/// Inner-bound set functions of a random mixture (over Q) of binary linear
/// deterministic networks with uniform inputs and linear auxiliaries. Values are
/// exact: each mutual information is a rank difference.
SetFunctionTable random_entropic_table(Rng& rng, int users_a, int users_b);

/// Values uniform on a grid of step 1/den subject only to A <= E and B <= G.
SetFunctionTable random_box_table(Rng& rng, int users_a, int users_b, int den = 16, int max_value = 4);

/// Modular-additive semi-deterministic instance with |X| = |S| = modulus =
/// alphabet, |Q| in {1, 2}, and a trivial auxiliary.
std::pair<dm::Distribution, dm::SdChannel> random_sd_instance(Rng& rng, int users_a, int users_b, int alphabet);

}  // namespace macic::rnd
