#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "macic/rational.hpp"

namespace macic {

/// Joint law of finitely many discrete variables, stored as its support.
/// Probabilities are exact; entropies are evaluated in double from exact
/// marginals and cached per variable subset.
class JointPmf {
 public:
  using VarSet = std::uint32_t;
  static constexpr int kMaxVars = 32;

  JointPmf(std::vector<std::string> names, std::vector<int> sizes);

  /// Adds mass to an outcome (accumulates on repeats).
  void add(const std::vector<int>& outcome, const Rational& p);

  std::size_t var_count() const { return names_.size(); }
  int size(int var) const { return sizes_.at(static_cast<std::size_t>(var)); }
  int var(std::string_view name) const;
  /// Bitmask of the named variables.
  VarSet set(std::initializer_list<std::string_view> names) const;
  std::size_t support_size() const { return atoms_.size(); }
  Rational total() const;

  /// Throws std::invalid_argument unless the masses sum to exactly 1.
  void require_normalized() const;

  /// Exact marginal law over `vars`, keyed by the mixed-radix code of the
  /// restricted outcome.
  std::unordered_map<std::uint64_t, Rational> marginal(VarSet vars) const;

  /// H(vars) in bits.
  double entropy(VarSet vars) const;
  /// H(x | given) = H(x, given) - H(given)
  double entropy(VarSet x, VarSet given) const;
  /// I(x; y | given)
  double mutual_information(VarSet x, VarSet y, VarSet given = 0) const;

  struct Atom {
    std::vector<int> outcome;
    Rational p;
  };
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::uint64_t code(const std::vector<int>& outcome, VarSet vars) const;

  std::vector<std::string> names_;
  std::vector<int> sizes_;
  std::vector<Atom> atoms_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  mutable std::unordered_map<VarSet, double> cache_;
};

/// -sum p log2 p over an explicit probability list; zeros are skipped.
double entropy_bits(const std::vector<Rational>& probabilities);

}  // namespace macic
