#pragma once

#include <array>
#include <string>
#include <vector>

#include "macic/polytope.hpp"
#include "macic/set_function_table.hpp"

namespace macic::gaussian {

/// Two-cell Gaussian network described by linear-scale SNRs and INRs with
/// unit-variance noise. snr[c][j] is the SNR of user j of cell c at its own
/// receiver; the interfering user 0 of cell c reaches the other receiver with
/// INR inr_from[c].
class Channel {
 public:
  Channel(std::vector<double> snr_a, std::vector<double> snr_b, double inr_a0_to_b, double inr_b0_to_a);

  /// Linear = 10^(dB / 10).
  static Channel from_db(const std::vector<double>& snr_db_a, const std::vector<double>& snr_db_b,
                         double inr_db_a0_to_b, double inr_db_b0_to_a);

  /// SNR_ij = P_ij |h_ij,i|^2 and INR_i0,i' = P_i0 |h_i0,i'|^2.
  static Channel from_gains(const std::vector<double>& gain_a, const std::vector<double>& gain_b,
                            const std::vector<double>& power_a, const std::vector<double>& power_b,
                            double cross_gain_a0_to_b, double cross_gain_b0_to_a);

  int users(Cell c) const { return static_cast<int>(snr_[index(c)].size()); }
  double snr(Cell c, int user) const { return snr_[index(c)].at(static_cast<std::size_t>(user)); }
  /// INR with which user 0 of cell c is received at the other cell's receiver.
  double inr_from(Cell c) const { return inr_from_[index(c)]; }
  /// INR of the interference arriving at receiver c (from user 0 of the other cell).
  double inr_into(Cell c) const { return inr_from_[index(other(c))]; }

 private:
  std::array<std::vector<double>, 2> snr_;
  std::array<double, 2> inr_from_{};
};

/// log2(1 + x)
double capacity(double x);

/// Private-power fraction min{1, 1/inr}. Throws std::invalid_argument for inr <= 0.
double mu(double inr);

/// Achievable set functions of the rate-split superposition scheme in which the
/// private part of each interferer arrives at the other receiver at noise level.
RealSetFunctionTable inner_table(const Channel& ch);

/// Genie-aided outer-bound set functions.
RealSetFunctionTable outer_table(const Channel& ch);

struct FunctionGap {
  SetFn fn = SetFn::A;
  double min_gap = 0;  // smallest outer - inner over masks
  double max_gap = 0;  // largest outer - inner over masks
  std::string worst_mask;
};

struct GapViolation {
  std::string kind;  // "set-function", "inequality", "vertex-shift"
  std::string where;
  double amount = 0;
};

struct GapReport {
  std::array<FunctionGap, 4> functions{};
  /// max over matched rows of (rhs_outer - rhs_inner) - (sum of coefficients);
  /// nonpositive when every row passes.
  double worst_row_excess = 0;
  std::string worst_row;
  bool vertex_shift_checked = false;
  bool vertex_shift_ok = true;
  std::size_t outer_vertices = 0;
  std::vector<GapViolation> violations;

  bool ok() const { return violations.empty(); }
};

struct GapOptions {
  /// Slack allowed on per-mask gaps in [0, 1] bits.
  double gap_tolerance = 1e-9;
  /// Membership tolerance for shifted outer vertices, in bits.
  double vertex_tolerance = 1e-6;
  /// Shift applied to every user before the membership test.
  double shift_bits = 1.0;
  /// Shifted coordinates are clamped at 0. When unset, the shifted vertex is
  /// tested against the inner rate inequalities without nonnegativity.
  bool clamp = true;
  bool check_vertices = true;
  /// Vertex-shift check runs only when both cells have at most this many users.
  int vertex_max_users = 2;
};

/// Per-mask gaps, per-row gaps and (optionally) the vertex-shift test between
/// the outer and inner regions; violations are reported, not thrown.
GapReport gap_report(const Channel& ch, const GapOptions& options = {});

}  // namespace macic::gaussian
