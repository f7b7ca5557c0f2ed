#pragma once

#include <array>
#include <vector>

#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic::gdof {

/// Rate exponents of a two-cell network relative to a nominal SNR.
struct Spec {
  std::array<std::vector<Rational>, 2> direct;  // alpha_{ij,i}
  /// alpha_{i0,i'}: exponent of user 0 of cell c at the other receiver.
  std::array<Rational, 2> cross{};

  int users(Cell c) const { return static_cast<int>(direct[index(c)].size()); }

  /// All direct exponents 1 and both cross exponents alpha.
  static Spec symmetric(int users_per_cell, const Rational& alpha);
  /// Throws std::invalid_argument for negative exponents or bad user counts.
  void validate() const;
};

/// a, b, e, g set functions; the maximum over an empty collection is 0.
SetFunctionTable gdof_table(const Spec& s);

Polytope gdof_region(const Spec& s);

/// Symmetric GDoF for K >= 2. The shoulders carry 1/K per user, so the cell
/// sum is 1. Throws std::invalid_argument for K < 2 or alpha < 0.
Rational dsym_closed_form(int users_per_cell, const Rational& alpha);

/// Symmetric GDoF read off the region (K >= 1).
Rational dsym_region(int users_per_cell, const Rational& alpha);

/// Sum GDoF 2d/(d+1) of time sharing between the interfering and
/// interference-free users, d = dsym_region(1, alpha).
Rational timeshare_sum_gdof(const Rational& alpha);

/// {0, step, 2 step, ...} up to and including max when it lies on the grid.
std::vector<Rational> alpha_grid(const Rational& max, const Rational& step);

struct CurveRow {
  int users_per_cell = 0;
  Rational alpha;
  Rational dsym;
  Rational sum;  // K * dsym
};

std::vector<CurveRow> dsym_curve(const std::vector<int>& users_per_cell, const std::vector<Rational>& alphas);

struct TimeshareRow {
  Rational alpha;
  Rational d1;         // dsym_region(1, alpha)
  Rational timeshare;  // 2 d1 / (d1 + 1)
  Rational superposition;  // 2 dsym_region(2, alpha)
};

std::vector<TimeshareRow> timeshare_curve(const std::vector<Rational>& alphas);

}  // namespace macic::gdof
