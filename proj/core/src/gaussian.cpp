#include "macic/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "macic/region.hpp"

namespace macic::gaussian {

Channel::Channel(std::vector<double> snr_a, std::vector<double> snr_b, double inr_a0_to_b,
                 double inr_b0_to_a)
    : snr_{std::move(snr_a), std::move(snr_b)}, inr_from_{inr_a0_to_b, inr_b0_to_a} {
  for (Cell c : kCells) {
    if (snr_[index(c)].empty() || snr_[index(c)].size() > static_cast<std::size_t>(kMaxUsersPerCell)) {
      throw std::invalid_argument(std::string("gaussian channel: bad user count in cell ") + name(c));
    }
    for (double s : snr_[index(c)]) {
      if (!(s > 0) || !std::isfinite(s)) throw std::invalid_argument("gaussian channel: SNRs must be positive and finite");
    }
    if (!(inr_from_[index(c)] > 0) || !std::isfinite(inr_from_[index(c)])) {
      throw std::invalid_argument("gaussian channel: INRs must be positive and finite");
    }
  }
}

namespace {
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
}  // namespace

Channel Channel::from_db(const std::vector<double>& snr_db_a, const std::vector<double>& snr_db_b,
                         double inr_db_a0_to_b, double inr_db_b0_to_a) {
  std::vector<double> a, b;
  std::transform(snr_db_a.begin(), snr_db_a.end(), std::back_inserter(a), db_to_linear);
  std::transform(snr_db_b.begin(), snr_db_b.end(), std::back_inserter(b), db_to_linear);
  return Channel(std::move(a), std::move(b), db_to_linear(inr_db_a0_to_b), db_to_linear(inr_db_b0_to_a));
}

Channel Channel::from_gains(const std::vector<double>& gain_a, const std::vector<double>& gain_b,
                            const std::vector<double>& power_a, const std::vector<double>& power_b,
                            double cross_gain_a0_to_b, double cross_gain_b0_to_a) {
  if (gain_a.size() != power_a.size() || gain_b.size() != power_b.size() || power_a.empty() || power_b.empty()) {
    throw std::invalid_argument("gaussian channel: gain and power lists must match per cell");
  }
  auto fold = [](const std::vector<double>& g, const std::vector<double>& p) {
    std::vector<double> out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) out[j] = p[j] * g[j] * g[j];
    return out;
  };
  return Channel(fold(gain_a, power_a), fold(gain_b, power_b),
                 power_a[0] * cross_gain_a0_to_b * cross_gain_a0_to_b,
                 power_b[0] * cross_gain_b0_to_a * cross_gain_b0_to_a);
}

double capacity(double x) { return std::log2(1.0 + x); }

double mu(double inr) {
  if (!(inr > 0)) throw std::invalid_argument("mu: INR must be positive");
  return std::min(1.0, 1.0 / inr);
}

namespace {

double snr_sum(const Channel& ch, Cell c, std::uint32_t bits, bool skip_interferer) {
  double s = 0;
  for (int j = skip_interferer ? 1 : 0; j < ch.users(c); ++j) {
    if ((bits >> j) & 1U) s += ch.snr(c, j);
  }
  return s;
}

}  // namespace

RealSetFunctionTable inner_table(const Channel& ch) {
  RealSetFunctionTable t(ch.users(Cell::a), ch.users(Cell::b));
  for (Cell c : kCells) {
    const double mu_own = mu(ch.inr_from(c));   // private fraction of this cell's interferer
    const double mu_other = mu(ch.inr_into(c));  // private fraction of the interferer reaching us
    const double inr = ch.inr_into(c);
    const double noise = 1.0 + mu_other * inr;

    for (const auto& u : enum_subsets(ch.users(c), SubsetKind::upsilon, c)) {
      const double signal = mu_own * ch.snr(c, 0) + snr_sum(ch, c, u.bits, true);
      t.set(SetFn::A, c, u.bits, capacity(signal / noise));
      t.set(SetFn::E, c, u.bits, capacity(signal / noise + (1.0 - mu_other) * inr / noise));
    }
    for (const auto& w : enum_subsets(ch.users(c), SubsetKind::omega, c)) {
      const double signal = snr_sum(ch, c, w.bits, false);
      t.set(SetFn::B, c, w.bits, capacity(signal / noise));
      t.set(SetFn::G, c, w.bits, capacity((signal + inr) / noise));
    }
  }
  return t;
}

RealSetFunctionTable outer_table(const Channel& ch) {
  RealSetFunctionTable t(ch.users(Cell::a), ch.users(Cell::b));
  for (Cell c : kCells) {
    const double inr_in = ch.inr_into(c);
    const double genie_term = ch.snr(c, 0) / (1.0 + ch.inr_from(c));
    for (const auto& u : enum_subsets(ch.users(c), SubsetKind::upsilon, c)) {
      const double signal = snr_sum(ch, c, u.bits, true) + genie_term;
      t.set(SetFn::A, c, u.bits, capacity(signal));
      t.set(SetFn::E, c, u.bits, capacity(signal + inr_in));
    }
    for (const auto& w : enum_subsets(ch.users(c), SubsetKind::omega, c)) {
      const double signal = snr_sum(ch, c, w.bits, false);
      t.set(SetFn::B, c, w.bits, capacity(signal));
      t.set(SetFn::G, c, w.bits, capacity(signal + inr_in));
    }
  }
  return t;
}

GapReport gap_report(const Channel& ch, const GapOptions& options) {
  const RealSetFunctionTable inner = inner_table(ch);
  const RealSetFunctionTable outer = outer_table(ch);
  GapReport report;

  for (SetFn f : kSetFns) {
    FunctionGap& g = report.functions[static_cast<int>(f)];
    g.fn = f;
    g.min_gap = std::numeric_limits<double>::infinity();
    g.max_gap = -std::numeric_limits<double>::infinity();
    for (Cell c : kCells) {
      for (const auto& m : enum_subsets(ch.users(c), domain(f), c)) {
        const double gap = outer.get(f, c, m.bits) - inner.get(f, c, m.bits);
        const std::string where = std::string(1, name(f)) + m.to_string();
        if (gap > g.max_gap) {
          g.max_gap = gap;
          g.worst_mask = where;
        }
        g.min_gap = std::min(g.min_gap, gap);
        if (gap < -options.gap_tolerance || gap > 1.0 + options.gap_tolerance) {
          report.violations.push_back({"set-function", where, gap});
        }
      }
    }
  }

  Polytope inner_region = build_generic_region(rationalize(inner));
  const Polytope outer_region = build_generic_region(rationalize(outer));

  report.worst_row_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < inner_region.inequalities.size(); ++k) {
    const auto& qi = inner_region.inequalities[k];
    const auto& qo = outer_region.inequalities[k];
    const double excess = Rational(qo.rhs - qi.rhs).get_d() - qi.coefficient_sum().get_d();
    if (excess > report.worst_row_excess) {
      report.worst_row_excess = excess;
      report.worst_row = qi.label;
    }
    if (excess > options.gap_tolerance) report.violations.push_back({"inequality", qi.label, excess});
  }

  if (options.check_vertices && ch.users(Cell::a) <= options.vertex_max_users &&
      ch.users(Cell::b) <= options.vertex_max_users) {
    report.vertex_shift_checked = true;
    if (!options.clamp) inner_region.nonneg = false;
    const Rational shift = dyadic_round(options.shift_bits);
    const Rational tol = dyadic_round(options.vertex_tolerance);
    const auto vertices = enumerate_vertices(outer_region);
    report.outer_vertices = vertices.size();
    for (const auto& v : vertices) {
      RatePoint shifted(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        shifted[j] = v[j] - shift;
        if (options.clamp && shifted[j] < 0) shifted[j] = 0;
      }
      if (!contains(inner_region, shifted, tol)) {
        report.vertex_shift_ok = false;
        std::string where = "(";
        for (std::size_t j = 0; j < v.size(); ++j) where += (j ? ", " : "") + std::to_string(v[j].get_d());
        report.violations.push_back({"vertex-shift", where + ")", 0});
      }
    }
  }
  return report;
}

}  // namespace macic::gaussian
