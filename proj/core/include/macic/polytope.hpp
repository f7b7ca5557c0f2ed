#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "macic/lp.hpp"
#include "macic/rational.hpp"

namespace macic {

/// coeffs . x <= rhs
struct LinearInequality {
  std::vector<Rational> coeffs;
  Rational rhs;
  /// Free-form provenance tag (family and masks); not part of the math.
  std::string label;

  Rational lhs(std::span<const Rational> x) const;
  Rational coefficient_sum() const;
  bool is_trivial() const;  // all coefficients zero
};

using RatePoint = std::vector<Rational>;

/// {x in Q^dim : every inequality holds, and x >= 0 when nonneg is set}.
struct Polytope {
  std::size_t dim = 0;
  std::vector<LinearInequality> inequalities;
  bool nonneg = true;
  /// Optional coordinate labels, empty or of length dim.
  std::vector<std::string> coordinate_names;

  Polytope() = default;
  explicit Polytope(std::size_t d, bool nonnegative = true) : dim(d), nonneg(nonnegative) {}

  /// Throws DimensionMismatch when the coefficient vector has the wrong length.
  void add(LinearInequality q);
  void add(std::vector<Rational> coeffs, Rational rhs, std::string label = {});

  /// Inequality rows followed by one -x_j <= 0 row per coordinate when nonneg.
  void constraint_rows(std::vector<std::vector<Rational>>& rows, std::vector<Rational>& rhs) const;
};

/// Exact membership. Throws DimensionMismatch.
bool contains(const Polytope& p, std::span<const Rational> x);
/// Membership with every constraint relaxed by `tolerance`.
bool contains(const Polytope& p, std::span<const Rational> x, const Rational& tolerance);
bool contains(const Polytope& p, std::span<const double> x, double tolerance);

bool is_empty(const Polytope& p);

/// Exact maximization of objective . x over p.
lp::Result maximize(const Polytope& p, std::span<const Rational> objective);

enum class Implication { implied, not_implied, unbounded, empty };

struct ImplicationResult {
  Implication verdict = Implication::empty;
  /// max of q's left side over p (valid when bounded and nonempty).
  Rational max_lhs;
  /// Multipliers over p's constraint rows (inequalities, then nonnegativity
  /// rows) certifying max_lhs; see verify_certificate.
  std::vector<Rational> certificate;
};

ImplicationResult check_implication(const Polytope& p, const LinearInequality& q);

/// True iff q holds on all of p. Throws UnboundedError when q's left side is
/// unbounded over p and EmptyPolytopeError when p is empty.
bool implies(const Polytope& p, const LinearInequality& q);

/// Checks a Farkas-style certificate independently of the LP: y >= 0,
/// y^T A == q.coeffs and y . b <= q.rhs over p's constraint rows.
bool verify_certificate(const Polytope& p, const LinearInequality& q, std::span<const Rational> y);

/// Mutual implication. Two empty polytopes are equal; an empty and a nonempty
/// one are not.
bool polytope_equal(const Polytope& lhs, const Polytope& rhs);

inline constexpr std::size_t kMaxVertexDim = 6;

/// Exact vertex list of a bounded polytope via the double description method,
/// sorted lexicographically and deduplicated; empty for an empty polytope.
/// Throws std::invalid_argument when dim > max_dim and UnboundedError when the
/// polyhedron is nonempty and unbounded.
std::vector<RatePoint> enumerate_vertices(const Polytope& p, std::size_t max_dim = kMaxVertexDim);

}  // namespace macic
