#include "macic/lp.hpp"

#include <optional>
#include <stdexcept>

#include "macic/errors.hpp"

namespace macic::lp {
namespace {

// Standard-form tableau for  min cost.y  s.t.  M y = rhs, y >= 0.
// Columns [0, m) are structural, [m, m + n) artificial.
class Tableau {
 public:
  Tableau(std::span<const std::vector<Rational>> rows, std::span<const Rational> objective)
      : n_(objective.size()), m_(rows.size()), cols_(m_ + n_) {
    a_.assign(n_, std::vector<Rational>(cols_ + 1));
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const bool flip = objective[i] < 0;
      for (std::size_t k = 0; k < m_; ++k) {
        a_[i][k] = flip ? Rational(-rows[k][i]) : rows[k][i];
      }
      a_[i][m_ + i] = 1;
      a_[i][cols_] = flip ? Rational(-objective[i]) : objective[i];
      basis_[i] = m_ + i;
    }
  }

  // Minimizes the given column costs; columns >= allowed_cols never enter.
  // Returns false if the objective is unbounded below.
  bool minimize(const std::vector<Rational>& cost, std::size_t allowed_cols) {
    reduced_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= cb * a_[i][j];
    }

    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][*enter] <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  // Drives zero-level artificials out of the basis, dropping redundant rows.
  void purge_artificials() {
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < m_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < m_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Rational artificial_sum() const {
    Rational s = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] >= m_) s += a_[i][cols_];
    }
    return s;
  }

  std::vector<Rational> structural_solution() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] < m_) y[basis_[i]] = a_[i][cols_];
    }
    return y;
  }

  std::size_t structural_cols() const { return m_; }
  std::size_t total_cols() const { return cols_; }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (std::size_t j = 0; j <= cols_; ++j) a_[r][j] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    if (!reduced_.empty() && reduced_[c] != 0) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (a_[r][j] != 0) reduced_[j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

enum class DualOutcome { optimal, unbounded, infeasible };

struct DualSolution {
  DualOutcome outcome;
  std::vector<Rational> y;
};

DualSolution solve_dual(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
                        std::span<const Rational> objective) {
  Tableau t(rows, objective);
  const std::size_t m = t.structural_cols();

  std::vector<Rational> phase1(t.total_cols(), 0);
  for (std::size_t j = m; j < t.total_cols(); ++j) phase1[j] = 1;
  t.minimize(phase1, t.total_cols());
  if (t.artificial_sum() != 0) return {DualOutcome::infeasible, {}};
  t.purge_artificials();

  std::vector<Rational> phase2(t.total_cols(), 0);
  for (std::size_t k = 0; k < m; ++k) phase2[k] = rhs[k];
  if (!t.minimize(phase2, m)) return {DualOutcome::unbounded, {}};
  return {DualOutcome::optimal, t.structural_solution()};
}

void check_shapes(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
                  std::size_t dim) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("lp: row count differs from rhs count");
  for (const auto& r : rows) {
    if (r.size() != dim) throw DimensionMismatch("lp: constraint row has wrong length");
  }
}

}  // namespace

bool feasible(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
              std::size_t dim) {
  check_shapes(rows, rhs, dim);
  // Farkas: infeasible iff some y >= 0 has rows^T y = 0 and rhs.y < 0, i.e.
  // iff the zero-objective dual is unbounded below.
  std::vector<Rational> zero(dim, 0);
  return solve_dual(rows, rhs, zero).outcome != DualOutcome::unbounded;
}

Result maximize(std::span<const std::vector<Rational>> rows, std::span<const Rational> rhs,
                std::span<const Rational> objective) {
  check_shapes(rows, rhs, objective.size());

  DualSolution dual = solve_dual(rows, rhs, objective);
  switch (dual.outcome) {
    case DualOutcome::optimal: {
      Result res{Status::optimal, 0, std::move(dual.y)};
      for (std::size_t k = 0; k < rhs.size(); ++k) res.value += res.multipliers[k] * rhs[k];
      return res;
    }
    case DualOutcome::unbounded:
      return {Status::infeasible, 0, {}};
    case DualOutcome::infeasible:
      return {feasible(rows, rhs, objective.size()) ? Status::unbounded : Status::infeasible, 0, {}};
  }
  throw std::logic_error("lp::maximize: unreachable");
}

}  // namespace macic::lp
