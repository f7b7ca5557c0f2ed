#include "macic/region.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace macic {

std::vector<std::string> rate_names(int users_a, int users_b) {
  std::vector<std::string> names;
  for (int j = 0; j < users_a; ++j) names.push_back("R_a" + std::to_string(j));
  for (int j = 0; j < users_b; ++j) names.push_back("R_b" + std::to_string(j));
  return names;
}

void add_mask(std::vector<Rational>& coeffs, const SubsetMask& mask, int users_a) {
  for (int j = 0; j < kMaxUsersPerCell; ++j) {
    if (mask.contains(j)) coeffs[rate_coordinate(mask.cell, j, users_a)] += 1;
  }
}

std::size_t generic_region_row_count(int users_a, int users_b) {
  const std::size_t ua = std::size_t{1} << (users_a - 1), ub = std::size_t{1} << (users_b - 1);
  const std::size_t oa = (std::size_t{1} << users_a) - 1, ob = (std::size_t{1} << users_b) - 1;
  return oa + ob + ua * ob + oa * ub + ua * ub + ua * oa * ub + ua * ob * ub;
}

Polytope build_generic_region(const SetFunctionTable& t) {
  t.require_complete();
  const int ka = t.users(Cell::a);
  const int kb = t.users(Cell::b);
  const std::size_t dim = static_cast<std::size_t>(ka + kb);

  Polytope p(dim, true);
  p.coordinate_names = rate_names(ka, kb);
  p.inequalities.reserve(generic_region_row_count(ka, kb));

  const auto ups_a = enum_subsets(ka, SubsetKind::upsilon, Cell::a);
  const auto ups_b = enum_subsets(kb, SubsetKind::upsilon, Cell::b);
  const auto om_a = enum_subsets(ka, SubsetKind::omega, Cell::a);
  const auto om_b = enum_subsets(kb, SubsetKind::omega, Cell::b);

  auto row = [&](std::initializer_list<SubsetMask> masks, Rational rhs, std::string label) {
    std::vector<Rational> coeffs(dim, 0);
    for (const auto& m : masks) add_mask(coeffs, m, ka);
    p.add(std::move(coeffs), std::move(rhs), std::move(label));
  };

  for (const auto& o : om_a) row({o}, t.B(Cell::a, o.bits), "B" + o.to_string());
  for (const auto& o : om_b) row({o}, t.B(Cell::b, o.bits), "B" + o.to_string());
  for (const auto& u : ups_a) {
    for (const auto& o : om_b) {
      row({u, o}, t.A(Cell::a, u.bits) + t.G(Cell::b, o.bits), "A" + u.to_string() + "+G" + o.to_string());
    }
  }
  for (const auto& o : om_a) {
    for (const auto& u : ups_b) {
      row({o, u}, t.A(Cell::b, u.bits) + t.G(Cell::a, o.bits), "A" + u.to_string() + "+G" + o.to_string());
    }
  }
  for (const auto& ua : ups_a) {
    for (const auto& ub : ups_b) {
      row({ua, ub}, t.E(Cell::a, ua.bits) + t.E(Cell::b, ub.bits),
          "E" + ua.to_string() + "+E" + ub.to_string());
    }
  }
  for (const auto& ua : ups_a) {
    for (const auto& oa : om_a) {
      for (const auto& ub : ups_b) {
        row({ua, oa, ub}, t.A(Cell::a, ua.bits) + t.G(Cell::a, oa.bits) + t.E(Cell::b, ub.bits),
            "A" + ua.to_string() + "+G" + oa.to_string() + "+E" + ub.to_string());
      }
    }
  }
  for (const auto& ua : ups_a) {
    for (const auto& ob : om_b) {
      for (const auto& ub : ups_b) {
        row({ua, ob, ub}, t.A(Cell::b, ub.bits) + t.G(Cell::b, ob.bits) + t.E(Cell::a, ua.bits),
            "A" + ub.to_string() + "+G" + ob.to_string() + "+E" + ua.to_string());
      }
    }
  }
  return p;
}

Rational symmetric_max(const Polytope& p) {
  if (p.inequalities.empty()) throw std::invalid_argument("symmetric_max: polytope has no inequalities");
  std::optional<Rational> best;
  for (const auto& q : p.inequalities) {
    for (const auto& c : q.coeffs) {
      if (c < 0) throw std::invalid_argument("symmetric_max: negative coefficient in row " + q.label);
    }
    const Rational s = q.coefficient_sum();
    if (s == 0) {
      if (q.rhs < 0) throw EmptyPolytopeError("symmetric_max: infeasible constant row " + q.label);
      continue;
    }
    Rational ratio = q.rhs / s;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  if (!best) throw std::invalid_argument("symmetric_max: every row is constant; the diagonal is unbounded");
  if (*best < 0) throw EmptyPolytopeError("symmetric_max: no nonnegative point on the diagonal");
  return *best;
}

namespace {

// best[s] = smallest value of f over admissible masks of cell c with s members.
std::vector<std::optional<Rational>> min_by_size(const SetFunctionTable& t, SetFn f, Cell c) {
  std::vector<std::optional<Rational>> best(static_cast<std::size_t>(t.users(c)) + 1);
  for (const auto& m : enum_subsets(t.users(c), domain(f), c)) {
    auto& slot = best[static_cast<std::size_t>(m.size())];
    const Rational& v = t.get(f, c, m.bits);
    if (!slot || v < *slot) slot = v;
  }
  return best;
}

}  // namespace

Rational symmetric_max(const SetFunctionTable& t) {
  t.require_complete();
  std::array<std::array<std::vector<std::optional<Rational>>, 4>, 2> m;
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) m[index(c)][static_cast<int>(f)] = min_by_size(t, f, c);
  }
  auto fn = [&](Cell c, SetFn f) -> const std::vector<std::optional<Rational>>& { return m[index(c)][static_cast<int>(f)]; };

  std::optional<Rational> best;
  auto consider = [&](const Rational& rhs, std::size_t size) {
    Rational r = rhs / static_cast<unsigned long>(size);
    if (!best || r < *best) best = std::move(r);
  };
  // Sums of one entry per listed (cell, function), over all size choices.
  auto sweep = [&](std::initializer_list<std::pair<Cell, SetFn>> terms) {
    std::vector<const std::vector<std::optional<Rational>>*> lists;
    for (const auto& [c, f] : terms) lists.push_back(&fn(c, f));
    std::vector<std::size_t> pick(lists.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, const Rational& rhs, std::size_t size) -> void {
      if (k == lists.size()) {
        consider(rhs, size);
        return;
      }
      for (std::size_t s = 1; s < lists[k]->size(); ++s) {
        if ((*lists[k])[s]) self(self, k + 1, rhs + *(*lists[k])[s], size + s);
      }
    };
    rec(rec, 0, Rational(0), 0);
  };
  const Cell a = Cell::a, b = Cell::b;
  sweep({{a, SetFn::B}});
  sweep({{b, SetFn::B}});
  sweep({{a, SetFn::A}, {b, SetFn::G}});
  sweep({{b, SetFn::A}, {a, SetFn::G}});
  sweep({{a, SetFn::E}, {b, SetFn::E}});
  sweep({{a, SetFn::A}, {a, SetFn::G}, {b, SetFn::E}});
  sweep({{b, SetFn::A}, {b, SetFn::G}, {a, SetFn::E}});
  if (*best < 0) throw EmptyPolytopeError("symmetric_max: no nonnegative point on the diagonal");
  return *best;
}

}  // namespace macic
