#include "macic/gdof.hpp"

#include <algorithm>
#include <stdexcept>

#include "macic/region.hpp"

namespace macic::gdof {

Spec Spec::symmetric(int users_per_cell, const Rational& alpha) {
  if (users_per_cell < 1) throw std::invalid_argument("gdof exponents: K must be at least 1");
  Spec s;
  for (Cell c : kCells) s.direct[index(c)].assign(static_cast<std::size_t>(users_per_cell), Rational(1));
  s.cross = {alpha, alpha};
  s.validate();
  return s;
}

void Spec::validate() const {
  for (Cell c : kCells) {
    if (users(c) < 1 || users(c) > kMaxUsersPerCell) throw std::invalid_argument("gdof exponents: bad user count");
    for (const auto& x : direct[index(c)]) {
      if (x < 0) throw std::invalid_argument("gdof exponents: exponents must be nonnegative");
    }
    if (cross[index(c)] < 0) throw std::invalid_argument("gdof exponents: exponents must be nonnegative");
  }
}

namespace {

Rational max_over(const std::vector<Rational>& alpha, std::uint32_t bits, bool skip_interferer) {
  Rational best = 0;
  for (std::size_t j = skip_interferer ? 1 : 0; j < alpha.size(); ++j) {
    if ((bits >> j) & 1U) best = std::max(best, alpha[j]);
  }
  return best;
}

}  // namespace

SetFunctionTable gdof_table(const Spec& s) {
  s.validate();
  SetFunctionTable t(s.users(Cell::a), s.users(Cell::b));
  for (Cell c : kCells) {
    const auto& alpha = s.direct[index(c)];
    const Rational own_private = std::max(Rational(alpha[0] - s.cross[index(c)]), Rational(0));
    const Rational incoming = s.cross[index(other(c))];
    for (const auto& u : enum_subsets(s.users(c), SubsetKind::upsilon, c)) {
      const Rational a = std::max(max_over(alpha, u.bits, true), own_private);
      t.set(SetFn::A, c, u.bits, a);
      t.set(SetFn::E, c, u.bits, std::max(a, incoming));
    }
    for (const auto& w : enum_subsets(s.users(c), SubsetKind::omega, c)) {
      const Rational b = max_over(alpha, w.bits, false);
      t.set(SetFn::B, c, w.bits, b);
      t.set(SetFn::G, c, w.bits, std::max(b, incoming));
    }
  }
  return t;
}

Polytope gdof_region(const Spec& s) { return build_generic_region(gdof_table(s)); }

Rational dsym_closed_form(int users_per_cell, const Rational& alpha) {
  if (users_per_cell < 2) throw std::invalid_argument("dsym_closed_form: K must be at least 2");
  if (alpha < 0) throw std::invalid_argument("dsym_closed_form: alpha must be nonnegative");
  const Rational k = users_per_cell;
  const Rational shoulder = 1 / k;
  if (alpha < 1 - shoulder) return shoulder;
  if (alpha < 1) return Rational((2 - alpha) / (k + 1));
  if (alpha < 1 + shoulder) return Rational(alpha / (k + 1));
  return shoulder;
}

Rational dsym_region(int users_per_cell, const Rational& alpha) {
  return symmetric_max(gdof_table(Spec::symmetric(users_per_cell, alpha)));
}

Rational timeshare_sum_gdof(const Rational& alpha) {
  const Rational d = dsym_region(1, alpha);
  return 2 * d / (d + 1);
}

std::vector<Rational> alpha_grid(const Rational& max, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("alpha grid: step must be positive");
  if (max < 0) throw std::invalid_argument("alpha grid: max must be nonnegative");
  std::vector<Rational> out;
  for (Rational a = 0; a <= max; a += step) out.push_back(a);
  return out;
}

std::vector<CurveRow> dsym_curve(const std::vector<int>& users_per_cell, const std::vector<Rational>& alphas) {
  std::vector<CurveRow> rows;
  for (int k : users_per_cell) {
    for (const auto& a : alphas) {
      const Rational d = dsym_region(k, a);
      rows.push_back({k, a, d, k * d});
    }
  }
  return rows;
}

std::vector<TimeshareRow> timeshare_curve(const std::vector<Rational>& alphas) {
  std::vector<TimeshareRow> rows;
  for (const auto& a : alphas) {
    const Rational d1 = dsym_region(1, a);
    rows.push_back({a, d1, 2 * d1 / (d1 + 1), 2 * dsym_region(2, a)});
  }
  return rows;
}

}  // namespace macic::gdof
