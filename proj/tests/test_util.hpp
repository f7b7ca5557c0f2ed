#pragma once

#include <random>
#include <string>
#include <vector>

#include "macic/polytope.hpp"
#include "macic/rational.hpp"

namespace macic::test {

inline Rational R(const std::string& s) { return parse_rational(s); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Polytope make_polytope(std::size_t dim, bool nonneg,
                              const std::vector<std::pair<std::vector<long>, long>>& rows) {
  Polytope p(dim, nonneg);
  for (const auto& [c, b] : rows) {
    std::vector<Rational> coeffs;
    for (long x : c) coeffs.emplace_back(x);
    p.add(coeffs, Rational(b));
  }
  return p;
}

// Plain membership test written against the raw rows.
inline bool naive_member(const Polytope& p, const std::vector<Rational>& x) {
  if (p.nonneg) {
    for (const auto& v : x) {
      if (v < 0) return false;
    }
  }
  for (const auto& q : p.inequalities) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += q.coeffs[j] * x[j];
    if (s > q.rhs) return false;
  }
  return true;
}

// Every point of {lo, lo + step, ..., hi}^dim.
inline std::vector<std::vector<Rational>> grid_points(std::size_t dim, const Rational& lo, const Rational& hi,
                                                      const Rational& step) {
  std::vector<Rational> axis;
  for (Rational v = lo; v <= hi; v += step) axis.push_back(v);
  std::vector<std::vector<Rational>> pts{{}};
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<std::vector<Rational>> next;
    for (const auto& p : pts) {
      for (const auto& a : axis) {
        auto q = p;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace macic::test
