#include "macic/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "macic/errors.hpp"

namespace macic {

Rational LinearInequality::lhs(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw DimensionMismatch("inequality and point differ in dimension");
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (coeffs[j] != 0) s += coeffs[j] * x[j];
  }
  return s;
}

Rational LinearInequality::coefficient_sum() const {
  Rational s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

bool LinearInequality::is_trivial() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

void Polytope::add(LinearInequality q) {
  if (q.coeffs.size() != dim) {
    throw DimensionMismatch("inequality has " + std::to_string(q.coeffs.size()) +
                            " coefficients, polytope dimension is " + std::to_string(dim));
  }
  inequalities.push_back(std::move(q));
}

void Polytope::add(std::vector<Rational> coeffs, Rational rhs, std::string label) {
  add(LinearInequality{std::move(coeffs), std::move(rhs), std::move(label)});
}

void Polytope::constraint_rows(std::vector<std::vector<Rational>>& rows,
                               std::vector<Rational>& rhs) const {
  rows.clear();
  rhs.clear();
  rows.reserve(inequalities.size() + (nonneg ? dim : 0));
  for (const auto& q : inequalities) {
    rows.push_back(q.coeffs);
    rhs.push_back(q.rhs);
  }
  if (nonneg) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Rational> row(dim, 0);
      row[j] = -1;
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
}

bool contains(const Polytope& p, std::span<const Rational> x) { return contains(p, x, Rational(0)); }

bool contains(const Polytope& p, std::span<const Rational> x, const Rational& tolerance) {
  if (x.size() != p.dim) throw DimensionMismatch("point and polytope differ in dimension");
  if (p.nonneg) {
    for (const auto& v : x) {
      if (v < -tolerance) return false;
    }
  }
  for (const auto& q : p.inequalities) {
    if (q.lhs(x) > q.rhs + tolerance) return false;
  }
  return true;
}

bool contains(const Polytope& p, std::span<const double> x, double tolerance) {
  if (x.size() != p.dim) throw DimensionMismatch("point and polytope differ in dimension");
  if (p.nonneg) {
    for (double v : x) {
      if (v < -tolerance) return false;
    }
  }
  for (const auto& q : p.inequalities) {
    double s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += q.coeffs[j].get_d() * x[j];
    if (s > q.rhs.get_d() + tolerance) return false;
  }
  return true;
}

bool is_empty(const Polytope& p) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  p.constraint_rows(rows, rhs);
  return !lp::feasible(rows, rhs, p.dim);
}

lp::Result maximize(const Polytope& p, std::span<const Rational> objective) {
  if (objective.size() != p.dim) throw DimensionMismatch("objective and polytope differ in dimension");
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  p.constraint_rows(rows, rhs);
  return lp::maximize(rows, rhs, objective);
}

ImplicationResult check_implication(const Polytope& p, const LinearInequality& q) {
  if (q.coeffs.size() != p.dim) throw DimensionMismatch("inequality and polytope differ in dimension");
  lp::Result r = maximize(p, q.coeffs);
  ImplicationResult out;
  switch (r.status) {
    case lp::Status::infeasible:
      out.verdict = Implication::empty;
      break;
    case lp::Status::unbounded:
      out.verdict = Implication::unbounded;
      break;
    case lp::Status::optimal:
      out.verdict = r.value <= q.rhs ? Implication::implied : Implication::not_implied;
      out.max_lhs = r.value;
      out.certificate = std::move(r.multipliers);
      break;
  }
  return out;
}

bool implies(const Polytope& p, const LinearInequality& q) {
  ImplicationResult r = check_implication(p, q);
  switch (r.verdict) {
    case Implication::implied:
      return true;
    case Implication::not_implied:
      return false;
    case Implication::unbounded:
      throw UnboundedError("implies: left side is unbounded over the polytope");
    case Implication::empty:
      throw EmptyPolytopeError("implies: polytope is empty");
  }
  return false;
}

bool verify_certificate(const Polytope& p, const LinearInequality& q, std::span<const Rational> y) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  p.constraint_rows(rows, rhs);
  if (y.size() != rows.size() || q.coeffs.size() != p.dim) return false;
  std::vector<Rational> combo(p.dim, 0);
  Rational bound = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (y[k] < 0) return false;
    if (y[k] == 0) continue;
    for (std::size_t j = 0; j < p.dim; ++j) combo[j] += y[k] * rows[k][j];
    bound += y[k] * rhs[k];
  }
  return combo == q.coeffs && bound <= q.rhs;
}

namespace {

bool all_implied(const Polytope& p, const Polytope& targets) {
  auto check = [&](const LinearInequality& q) {
    return check_implication(p, q).verdict == Implication::implied;
  };
  if (!std::all_of(targets.inequalities.begin(), targets.inequalities.end(), check)) return false;
  if (targets.nonneg) {
    for (std::size_t j = 0; j < targets.dim; ++j) {
      std::vector<Rational> row(targets.dim, 0);
      row[j] = -1;
      if (!check(LinearInequality{std::move(row), 0, {}})) return false;
    }
  }
  return true;
}

}  // namespace

bool polytope_equal(const Polytope& lhs, const Polytope& rhs) {
  if (lhs.dim != rhs.dim) throw DimensionMismatch("polytope_equal: dimensions differ");
  const bool lhs_empty = is_empty(lhs);
  const bool rhs_empty = is_empty(rhs);
  if (lhs_empty || rhs_empty) return lhs_empty == rhs_empty;
  return all_implied(lhs, rhs) && all_implied(rhs, lhs);
}

// ---------------------------------------------------------------------------
// Double description. The polytope {x : A x <= b} is homogenized to the cone
// {(t, x) : t b - A x >= 0, t >= 0}; extreme rays with t > 0 are vertices.

namespace {

using Vec = std::vector<Rational>;

class ZeroSet {
 public:
  explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet r;
    r.words_.resize(words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }
  bool subset_of(const ZeroSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec z;
  ZeroSet zeros;
};

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void normalize(Vec& v) { normalize_max_abs(v); }

}  // namespace

std::vector<RatePoint> enumerate_vertices(const Polytope& p, std::size_t max_dim) {
  if (p.dim > max_dim) {
    throw std::invalid_argument("enumerate_vertices: dimension " + std::to_string(p.dim) +
                                " exceeds limit " + std::to_string(max_dim));
  }
  const std::size_t d = p.dim + 1;

  std::vector<Vec> halfspaces;
  {
    Vec t(d, 0);
    t[0] = 1;
    halfspaces.push_back(std::move(t));
  }
  for (const auto& q : p.inequalities) {
    Vec h(d);
    h[0] = q.rhs;
    for (std::size_t j = 0; j < p.dim; ++j) h[j + 1] = -q.coeffs[j];
    halfspaces.push_back(std::move(h));
  }
  if (p.nonneg) {
    for (std::size_t j = 0; j < p.dim; ++j) {
      Vec h(d, 0);
      h[j + 1] = 1;
      halfspaces.push_back(std::move(h));
    }
  }
  const std::size_t n_constraints = halfspaces.size();

  std::vector<Vec> lineality;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < n_constraints; ++k) {
    const Vec& h = halfspaces[k];

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const Vec& l) { return dot(h, l) != 0; });
    if (pivot != lineality.end()) {
      Vec l = *pivot;
      lineality.erase(pivot);
      Rational hl = dot(h, l);
      if (hl < 0) {
        for (auto& v : l) v = -v;
        hl = -hl;
      }
      for (auto& other : lineality) {
        Rational f = dot(h, other) / hl;
        if (f != 0) {
          for (std::size_t i = 0; i < d; ++i) other[i] -= f * l[i];
        }
      }
      for (auto& r : rays) {
        Rational f = dot(h, r.z) / hl;
        if (f != 0) {
          for (std::size_t i = 0; i < d; ++i) r.z[i] -= f * l[i];
          normalize(r.z);
        }
        r.zeros.set(k);
      }
      Ray fresh{l, ZeroSet(n_constraints)};
      for (std::size_t j = 0; j < k; ++j) fresh.zeros.set(j);
      normalize(fresh.z);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(h, rays[r].z);
      if (value[r] > 0) {
        pos.push_back(r);
      } else if (value[r] < 0) {
        neg.push_back(r);
      }
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (value[r] == 0) rays[r].zeros.set(k);
      }
      continue;
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] >= 0) {
        Ray kept = rays[r];
        if (value[r] == 0) kept.zeros.set(k);
        next.push_back(std::move(kept));
      }
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        ZeroSet common = rays[ip].zeros & rays[in].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == ip || r == in) continue;
          if (common.subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational& vp = value[ip];
        const Rational nv = -value[in];
        Ray combo{Vec(d), common};
        for (std::size_t i = 0; i < d; ++i) combo.z[i] = vp * rays[in].z[i] + nv * rays[ip].z[i];
        normalize(combo.z);
        combo.zeros.set(k);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatePoint> vertices;
  bool recession = !lineality.empty();
  for (const auto& r : rays) {
    if (r.z[0] > 0) {
      RatePoint v(p.dim);
      for (std::size_t j = 0; j < p.dim; ++j) v[j] = r.z[j + 1] / r.z[0];
      vertices.push_back(std::move(v));
    } else {
      recession = true;
    }
  }
  if (vertices.empty()) return vertices;
  if (recession) throw UnboundedError("enumerate_vertices: polyhedron is unbounded");

  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace macic
