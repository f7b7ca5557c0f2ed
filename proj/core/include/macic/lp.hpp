#pragma once

#include <span>
#include <vector>

#include "macic/rational.hpp"

namespace macic::lp {

enum class Status { optimal, unbounded, infeasible };

struct Result {
  Status status = Status::infeasible;
  /// Optimal objective value (only meaningful when status == optimal).
  Rational value;
  /// Nonnegative multipliers y, one per constraint row, with
  /// sum_k y_k * row_k == objective and sum_k y_k * rhs_k == value.
  /// Together they certify that no feasible point exceeds `value`.
  std::vector<Rational> multipliers;
};

/// Exact rational linear program
///
///     maximize  objective . x   subject to   rows[k] . x <= rhs[k],  x free.
///
/// Solved through its dual  min rhs.y  s.t.  rows^T y = objective, y >= 0  with
/// a two-phase tableau simplex and Bland's rule, so the tableau has one row per
/// primal variable regardless of how many constraints there are. When the dual
/// is infeasible a second, objective-free dual decides between "unbounded" and
/// "infeasible".
Result maximize(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
                std::span<const Rational> objective);

/// True iff rows . x <= rhs has a solution.
bool feasible(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
              std::size_t dim);

}  // namespace macic::lp
