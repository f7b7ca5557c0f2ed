#include "macic/set_function_table.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

namespace macic {

SetFunctionTable rationalize(const RealSetFunctionTable& table, int bits) {
  SetFunctionTable out(table.users(Cell::a), table.users(Cell::b));
  double worst = 0;
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(table.users(c), domain(f), c)) {
        if (!table.has(f, c, m.bits)) continue;
        const double v = table.get(f, c, m.bits);
        Rational r = dyadic_round(v, bits);
        worst = std::max(worst, std::abs(r.get_d() - v));
        out.set(f, c, m.bits, std::move(r));
      }
    }
  }
  spdlog::debug("rationalized set-function table to denominator 2^{}; max rounding error {:.3e} bits",
                bits, worst);
  return out;
}

RealSetFunctionTable to_real(const SetFunctionTable& table) {
  RealSetFunctionTable out(table.users(Cell::a), table.users(Cell::b));
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(table.users(c), domain(f), c)) {
        if (table.has(f, c, m.bits)) out.set(f, c, m.bits, table.get(f, c, m.bits).get_d());
      }
    }
  }
  return out;
}

namespace {

template <class T>
double as_double(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return v.get_d();
  }
}

template <class T>
void collect_chain(const BasicSetFunctionTable<T>& t, const T& tol, std::vector<TableViolation>& out) {
  for (Cell c : kCells) {
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::upsilon, c)) {
      if (t.A(c, m.bits) > t.E(c, m.bits) + tol) {
        out.push_back({"A" + m.to_string() + " > E" + m.to_string(),
                       as_double<T>(t.A(c, m.bits) - t.E(c, m.bits))});
      }
    }
    for (const auto& m : enum_subsets(t.users(c), SubsetKind::omega, c)) {
      if (t.B(c, m.bits) > t.G(c, m.bits) + tol) {
        out.push_back({"B" + m.to_string() + " > G" + m.to_string(),
                       as_double<T>(t.B(c, m.bits) - t.G(c, m.bits))});
      }
    }
  }
}

template <class T>
void collect_negative(const BasicSetFunctionTable<T>& t, const T& tol, std::vector<TableViolation>& out) {
  for (Cell c : kCells) {
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(t.users(c), domain(f), c)) {
        const T& v = t.get(f, c, m.bits);
        if (v < -tol) out.push_back({std::string(1, name(f)) + m.to_string() + " < 0", as_double<T>(v)});
      }
    }
  }
}

}  // namespace

std::vector<TableViolation> chain_rule_violations(const RealSetFunctionTable& t, double tolerance) {
  std::vector<TableViolation> out;
  collect_chain<double>(t, tolerance, out);
  return out;
}

std::vector<TableViolation> chain_rule_violations(const SetFunctionTable& t) {
  std::vector<TableViolation> out;
  collect_chain<Rational>(t, Rational(0), out);
  return out;
}

std::vector<TableViolation> negativity_violations(const RealSetFunctionTable& t, double tolerance) {
  std::vector<TableViolation> out;
  collect_negative<double>(t, tolerance, out);
  return out;
}

std::vector<TableViolation> negativity_violations(const SetFunctionTable& t) {
  std::vector<TableViolation> out;
  collect_negative<Rational>(t, Rational(0), out);
  return out;
}

std::vector<TableViolation> monotonicity_violations(const RealSetFunctionTable& t, double tolerance) {
  std::vector<TableViolation> out;
  for (Cell c : kCells) {
    const int k = t.users(c);
    for (SetFn f : kSetFns) {
      for (const auto& m : enum_subsets(k, domain(f), c)) {
        for (int j = 0; j < k; ++j) {
          if (m.contains(j)) continue;
          const std::uint32_t bigger = m.bits | (1U << j);
          const double small_v = t.get(f, c, m.bits);
          const double big_v = t.get(f, c, bigger);
          if (small_v > big_v + tolerance) {
            out.push_back({std::string(1, name(f)) + m.to_string() + " > " + std::string(1, name(f)) +
                               SubsetMask{c, bigger}.to_string(),
                           small_v - big_v});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace macic
