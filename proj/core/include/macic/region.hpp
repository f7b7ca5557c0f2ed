#pragma once

#include <string>
#include <vector>

#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic {

/// Coordinate of user j of cell c in the (R_a0..R_a(Ka-1), R_b0..R_b(Kb-1)) layout.
inline std::size_t rate_coordinate(Cell c, int user, int users_a) {
  return static_cast<std::size_t>(c == Cell::a ? user : users_a + user);
}

/// "R_a0", "R_b1", ...
std::vector<std::string> rate_names(int users_a, int users_b);

/// Adds the indicator of `mask` (coefficient +1 per member) into `coeffs`.
void add_mask(std::vector<Rational>& coeffs, const SubsetMask& mask, int users_a);

/// The generic region in Ka + Kb rate coordinates. For every admissible
/// combination of upsilon/omega masks it emits, in order, the seven families
///
///     R_Oa <= B_Oa                       R_Ob <= B_Ob
///     R_Ua + R_Ob <= A_Ua + G_Ob         R_Oa + R_Ub <= A_Ub + G_Oa
///     R_Ua + R_Ub <= E_Ua + E_Ub
///     R_Ua + R_Oa + R_Ub <= A_Ua + G_Oa + E_Ub
///     R_Ua + R_Ob + R_Ub <= A_Ub + G_Ob + E_Ua
///
/// (U = upsilon mask containing user 0, O = nonempty omega mask). A rate in
/// both masks of one row gets coefficient 2. Nonnegativity is included and no
/// row is deduplicated. Throws MissingEntryError for an incomplete table.
Polytope build_generic_region(const SetFunctionTable& table);

/// Number of rows build_generic_region emits for the given cell sizes.
std::size_t generic_region_row_count(int users_a, int users_b);

/// Largest d with d * (1, ..., 1) in p, computed as the minimum over rows of
/// rhs / (sum of coefficients). Requires nonnegative coefficients; throws
/// std::invalid_argument for an empty row list or a negative coefficient and
/// EmptyPolytopeError when even d = 0 is infeasible.
Rational symmetric_max(const Polytope& p);

/// Same value as symmetric_max(build_generic_region(table)) without building
/// the rows: every row's coefficient sum is the total size of its masks, so
/// only the smallest value of each function per mask size matters.
Rational symmetric_max(const SetFunctionTable& table);

}  // namespace macic
