#include "macic/fme.hpp"

#include <algorithm>
#include <stdexcept>

#include "macic/errors.hpp"
#include "macic/region.hpp"

namespace macic::fme {

std::size_t LinearSystem::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < var_names.size(); ++j) {
    if (var_names[j] == name) return j;
  }
  throw std::invalid_argument("linear system: unknown variable " + std::string(name));
}

Polytope LinearSystem::to_polytope() const {
  Polytope p(dim(), nonneg);
  p.coordinate_names = var_names;
  for (const auto& q : inequalities) p.add(q);
  return p;
}

LinearSystem LinearSystem::from_polytope(const Polytope& p, std::vector<std::string> names) {
  LinearSystem s;
  if (names.empty()) names = p.coordinate_names;
  if (names.empty()) {
    for (std::size_t j = 0; j < p.dim; ++j) names.push_back("x" + std::to_string(j));
  }
  if (names.size() != p.dim) throw DimensionMismatch("linear system: name count differs from dimension");
  s.var_names = std::move(names);
  s.inequalities = p.inequalities;
  s.nonneg = p.nonneg;
  return s;
}

LinearSystem build_initial_system(const SetFunctionTable& t) {
  t.require_complete();
  const int ka = t.users(Cell::a);
  LinearSystem sys;
  sys.var_names = rate_names(ka, t.users(Cell::b));
  sys.var_names.push_back("B_a0");
  sys.var_names.push_back("B_b0");
  sys.nonneg = true;
  const std::size_t n = sys.var_names.size();
  const std::size_t split[2] = {n - 2, n - 1};

  for (Cell c : kCells) {
    const std::size_t own = split[index(c)];
    const std::size_t cross = split[index(other(c))];
    const std::string tag(1, name(c));
    auto row = [&](std::initializer_list<SubsetMask> masks, int own_coef, int cross_coef, const Rational& rhs,
                   std::string label) {
      std::vector<Rational> coeffs(n, Rational(0));
      for (const auto& m : masks) add_mask(coeffs, m, ka);
      coeffs[own] += own_coef;
      coeffs[cross] += cross_coef;
      sys.inequalities.push_back({std::move(coeffs), rhs, std::move(label)});
    };
    const auto ups = enum_subsets(t.users(c), SubsetKind::upsilon, c);
    const auto oms = enum_subsets(t.users(c), SubsetKind::omega, c);
    for (const auto& u : ups) row({u}, -1, 0, t.A(c, u.bits), "A" + u.to_string());
    for (const auto& w : oms) row({w}, 0, 0, t.B(c, w.bits), "B" + w.to_string());
    for (const auto& u : ups) row({u}, -1, 1, t.E(c, u.bits), "E" + u.to_string());
    for (const auto& w : oms) row({w}, 0, 1, t.G(c, w.bits), "G" + w.to_string());
    row({}, -1, 0, Rational(0), "C_" + tag);
    for (const auto& u : ups) {
      std::vector<Rational> coeffs(n, Rational(0));
      add_mask(coeffs, u, ka);
      for (auto& x : coeffs) x = -x;
      coeffs[own] = 1;
      sys.inequalities.push_back({std::move(coeffs), Rational(0), "D" + u.to_string()});
    }
  }
  return sys;
}

namespace {

bool same_row(const LinearInequality& x, const LinearInequality& y) { return x.coeffs == y.coeffs && x.rhs == y.rhs; }

}  // namespace

LinearSystem fme_eliminate(const LinearSystem& sys, std::string_view var) {
  const std::size_t k = sys.index_of(var);
  std::vector<LinearInequality> rows = sys.inequalities;
  if (sys.nonneg) {
    std::vector<Rational> c(sys.dim(), Rational(0));
    c[k] = -1;
    rows.push_back({std::move(c), Rational(0), "nonneg_" + std::string(var)});
  }

  std::vector<const LinearInequality*> upper, lower;
  LinearSystem out;
  out.nonneg = sys.nonneg;
  for (std::size_t j = 0; j < sys.dim(); ++j) {
    if (j != k) out.var_names.push_back(sys.var_names[j]);
  }
  auto drop = [k](const std::vector<Rational>& c) {
    std::vector<Rational> r;
    r.reserve(c.size() - 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != k) r.push_back(c[j]);
    }
    return r;
  };
  auto push = [&out](LinearInequality q) {
    normalize_max_abs(q.coeffs, &q.rhs);
    for (const auto& e : out.inequalities) {
      if (same_row(e, q)) return;
    }
    out.inequalities.push_back(std::move(q));
  };

  for (const auto& q : rows) {
    const int s = sgn(q.coeffs[k]);
    if (s > 0) {
      upper.push_back(&q);
    } else if (s < 0) {
      lower.push_back(&q);
    } else {
      push({drop(q.coeffs), q.rhs, q.label});
    }
  }
  for (const auto* lo : lower) {
    for (const auto* up : upper) {
      const Rational wl = up->coeffs[k];    // > 0
      const Rational wu = -lo->coeffs[k];   // > 0
      std::vector<Rational> c(sys.dim());
      for (std::size_t j = 0; j < sys.dim(); ++j) c[j] = wl * lo->coeffs[j] + wu * up->coeffs[j];
      push({drop(c), wl * lo->rhs + wu * up->rhs, lo->label + "+" + up->label});
    }
  }
  return out;
}

LinearSystem remove_redundant(const LinearSystem& sys) {
  std::vector<bool> keep(sys.inequalities.size(), true);
  for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
    const auto& q = sys.inequalities[i];
    if (q.is_trivial()) {
      // 0 <= rhs: vacuous when rhs >= 0. A violated trivial row makes the
      // whole set empty and stays.
      if (q.rhs >= 0) keep[i] = false;
      continue;
    }
    Polytope rest(sys.dim(), sys.nonneg);
    for (std::size_t j = 0; j < sys.inequalities.size(); ++j) {
      if (j != i && keep[j]) rest.add(sys.inequalities[j]);
    }
    const auto r = check_implication(rest, q);
    if (r.verdict == Implication::implied || r.verdict == Implication::empty) keep[i] = false;
  }
  LinearSystem out;
  out.var_names = sys.var_names;
  out.nonneg = sys.nonneg;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) out.inequalities.push_back(sys.inequalities[i]);
  }
  return out;
}

LinearSystem project(const LinearSystem& sys, const std::vector<std::string>& vars, bool prune) {
  LinearSystem cur = sys;
  for (const auto& v : vars) {
    cur = fme_eliminate(cur, v);
    if (prune) cur = remove_redundant(cur);
  }
  return cur;
}

Polytope closed_form_region(const SetFunctionTable& t, bool include_single_rate) {
  t.require_complete();
  const int ka = t.users(Cell::a);
  const int kb = t.users(Cell::b);
  Polytope p(static_cast<std::size_t>(ka + kb));
  p.coordinate_names = rate_names(ka, kb);
  auto row = [&](std::initializer_list<SubsetMask> masks, const Rational& rhs, std::string label) {
    std::vector<Rational> coeffs(p.dim, Rational(0));
    for (const auto& m : masks) add_mask(coeffs, m, ka);
    p.add(std::move(coeffs), rhs, std::move(label));
  };
  const auto ua = enum_subsets(ka, SubsetKind::upsilon, Cell::a);
  const auto oa = enum_subsets(ka, SubsetKind::omega, Cell::a);
  const auto ub = enum_subsets(kb, SubsetKind::upsilon, Cell::b);
  const auto ob = enum_subsets(kb, SubsetKind::omega, Cell::b);
  const Cell a = Cell::a, b = Cell::b;

  for (const auto& w : oa) row({w}, t.B(a, w.bits), "B" + w.to_string());
  for (const auto& w : ob) row({w}, t.B(b, w.bits), "B" + w.to_string());
  if (include_single_rate) {
    for (const auto& x : ua)
      for (const auto& y : ub) row({x}, t.A(a, x.bits) + t.E(b, y.bits), "A" + x.to_string() + "+E" + y.to_string());
    for (const auto& y : ub)
      for (const auto& x : ua) row({y}, t.A(b, y.bits) + t.E(a, x.bits), "A" + y.to_string() + "+E" + x.to_string());
  }
  for (const auto& x : ua)
    for (const auto& w : ob) row({x, w}, t.A(a, x.bits) + t.G(b, w.bits), "A" + x.to_string() + "+G" + w.to_string());
  for (const auto& y : ub)
    for (const auto& w : oa) row({y, w}, t.A(b, y.bits) + t.G(a, w.bits), "A" + y.to_string() + "+G" + w.to_string());
  for (const auto& x : ua)
    for (const auto& y : ub) row({x, y}, t.E(a, x.bits) + t.E(b, y.bits), "E" + x.to_string() + "+E" + y.to_string());
  for (const auto& x : ua)
    for (const auto& y : ub)
      for (const auto& w : oa)
        row({x, y, w}, t.A(a, x.bits) + t.E(b, y.bits) + t.G(a, w.bits),
            "A" + x.to_string() + "+E" + y.to_string() + "+G" + w.to_string());
  for (const auto& y : ub)
    for (const auto& x : ua)
      for (const auto& w : ob)
        row({y, x, w}, t.A(b, y.bits) + t.E(a, x.bits) + t.G(b, w.bits),
            "A" + y.to_string() + "+E" + x.to_string() + "+G" + w.to_string());
  return p;
}

VerifyResult verify_projection(const SetFunctionTable& t, bool include_single_rate) {
  VerifyResult r;
  t.require_complete();
  auto bad = negativity_violations(t);
  auto chain = chain_rule_violations(t);
  bad.insert(bad.end(), chain.begin(), chain.end());
  if (!bad.empty()) {
    r.status = VerifyStatus::precondition_failed;
    r.detail = bad.front().what;
    return r;
  }
  const LinearSystem projected = project(build_initial_system(t), {"B_a0", "B_b0"});
  r.projected_rows = projected.inequalities.size();
  const Polytope lhs = projected.to_polytope();
  const Polytope rhs = closed_form_region(t, include_single_rate);
  if (polytope_equal(lhs, rhs)) {
    r.status = VerifyStatus::equal;
    return r;
  }
  r.status = VerifyStatus::mismatch;
  for (const auto& q : lhs.inequalities) {
    const auto c = check_implication(rhs, q);
    if (c.verdict != Implication::implied) {
      r.detail = "closed form misses projected row " + q.label;
      return r;
    }
  }
  for (const auto& q : rhs.inequalities) {
    const auto c = check_implication(lhs, q);
    if (c.verdict != Implication::implied) {
      r.detail = "projection misses closed-form row " + q.label;
      return r;
    }
  }
  return r;
}

}  // namespace macic::fme
