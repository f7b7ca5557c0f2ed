#pragma once

#include <array>
#include <string>
#include <vector>

#include "macic/pmf.hpp"
#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic::dm {

/// Joint outcome counts above this are rejected.
inline constexpr double kMaxJointStates = 1e6;

/// Input law p(q) p(u_a0, x_a | q) p(u_b0, x_b | q). Within a cell all users
/// share one input alphabet.
struct Distribution {
  std::array<int, 2> users{1, 1};
  std::array<int, 2> x_size{2, 2};
  std::array<int, 2> u_size{1, 1};
  std::vector<Rational> p_q;
  /// p_ux[c][q][k]: k is the mixed-radix code of (u, x_c0, ..., x_c(K-1)) with
  /// u most significant and x_c(K-1) least significant.
  std::array<std::vector<std::vector<Rational>>, 2> p_ux;

  int q_size() const { return static_cast<int>(p_q.size()); }
  int x_states(Cell c) const;  // x_size^K
  /// Throws std::invalid_argument when shapes disagree or a factor does not sum to 1.
  void validate() const;
};

/// Semi-deterministic channel with modular-additive outputs
/// Y_c = (sum_j X_cj + S_c') mod modulus[c], where S_c is produced by user 0
/// of cell c through p(s | x_c0).
struct SdChannel {
  std::array<int, 2> x_size{2, 2};
  std::array<int, 2> s_size{1, 1};
  std::array<int, 2> modulus{2, 2};
  /// interference[c][x0][s] = p(S_c = s | X_c0 = x0)
  std::array<std::vector<std::vector<Rational>>, 2> interference;

  int output(Cell c, const std::vector<int>& x, int s_other) const;
  /// Checks shapes, normalization, and that s' -> Y_c is injective for every
  /// fixed x_c (exhaustively). Throws std::invalid_argument.
  void validate(int users_a, int users_b) const;
};

/// Q, U_a0, X_a.., U_b0, X_b.., S_a, S_b, Y_a, Y_b
JointPmf inner_joint(const Distribution& d, const SdChannel& ch);
/// Q, X_a.., X_b.., S_a, S_b, T_a, T_b, Y_a, Y_b with T_c an independent copy
/// of S_c given X_c0. The auxiliaries of d are marginalized out.
JointPmf outer_joint(const Distribution& d, const SdChannel& ch);

/// Conditional mutual informations of the superposition inner bound.
RealSetFunctionTable dm_inner_table(const Distribution& d, const SdChannel& ch);
RealSetFunctionTable dm_inner_table(const JointPmf& inner, int users_a, int users_b);

/// Genie-aided entropy-difference outer set functions.
RealSetFunctionTable sd_outer_table(const Distribution& d, const SdChannel& ch);
RealSetFunctionTable sd_outer_table(const JointPmf& outer, int users_a, int users_b);

/// Same input law with each auxiliary U_c0 drawn from p(s_c | x_c0).
Distribution with_genie_auxiliaries(const Distribution& d, const SdChannel& ch);

struct Shift {
  double on_rates_a = 0;  // I(X_b0; S_b | T_b)
  double on_rates_b = 0;  // I(X_a0; S_a | T_a)
};
Shift sd_gap_shift(const Distribution& d, const SdChannel& ch);

struct ContainmentReport {
  bool contained = true;
  Shift shift;
  std::size_t outer_vertices = 0;
  std::vector<TableViolation> table_violations;  // chain rule, negativity
  std::vector<std::string> failures;             // shifted vertices outside

  bool ok() const { return contained && table_violations.empty(); }
};

/// Every outer vertex, lowered by the shifts and clamped at 0, must lie in the
/// inner region built with U_c0 distributed as T_c. With clamp unset the
/// lowered vertex is tested against the inner rate inequalities alone.
ContainmentReport verify_containment(const Distribution& d, const SdChannel& ch, double tolerance = 1e-6,
                                     bool clamp = true);

/// G_Oc - E_Uc <= I(X_Oc; Y_c | X_rest, Q) for every pair of masks.
std::vector<TableViolation> inclusion_chain_violations(const Distribution& d, const SdChannel& ch,
                                                       double tolerance = 1e-9);

}  // namespace macic::dm
