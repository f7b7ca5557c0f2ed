#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic::fme {

/// Inequality system over named variables. When nonneg is set every variable
/// is additionally constrained to be >= 0.
struct LinearSystem {
  std::vector<std::string> var_names;
  std::vector<LinearInequality> inequalities;
  bool nonneg = false;

  std::size_t dim() const { return var_names.size(); }
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;
  Polytope to_polytope() const;
  static LinearSystem from_polytope(const Polytope& p, std::vector<std::string> names = {});
};

/// Rate coordinates followed by the split rates B_a0, B_b0. Per cell it emits,
/// over every upsilon and omega mask,
///
///     R_Ui - B_i0 <= A_Ui               R_Oi <= B_Oi
///     R_Ui - B_i0 + B_i'0 <= E_Ui       R_Oi + B_i'0 <= G_Oi
///     -B_i0 <= 0                        B_i0 - R_Ui <= 0
///
/// with rate nonnegativity carried by the nonneg flag.
LinearSystem build_initial_system(const SetFunctionTable& t);

/// Exact projection along one variable: every (lower, upper) pair combined,
/// variable-free rows carried over (trivial rows included).
LinearSystem fme_eliminate(const LinearSystem& sys, std::string_view var);

/// Greedily drops every row implied by the rows still kept plus the rows not
/// yet visited. The point set is unchanged.
LinearSystem remove_redundant(const LinearSystem& sys);

/// Eliminates `vars` in order, pruning after each step when `prune` is set.
LinearSystem project(const LinearSystem& sys, const std::vector<std::string>& vars, bool prune = true);

/// Nine-family closed form of the projected region. With include_single_rate
/// unset the families R_Ua <= A_Ua + E_Ub and R_Ub <= A_Ub + E_Ua are left out.
Polytope closed_form_region(const SetFunctionTable& t, bool include_single_rate = true);

enum class VerifyStatus { equal, mismatch, precondition_failed };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::mismatch;
  std::size_t projected_rows = 0;
  std::string detail;

  bool ok() const { return status == VerifyStatus::equal; }
};

/// Projects the initial system over B_a0, B_b0 and compares it with the
/// closed form. Tables must be nonnegative with A <= E and B <= G.
VerifyResult verify_projection(const SetFunctionTable& t, bool include_single_rate = true);

}  // namespace macic::fme
