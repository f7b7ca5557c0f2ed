#include "macic/pmf.hpp"

#include <cmath>
#include <stdexcept>

namespace macic {

JointPmf::JointPmf(std::vector<std::string> names, std::vector<int> sizes)
    : names_(std::move(names)), sizes_(std::move(sizes)) {
  if (names_.size() != sizes_.size()) throw std::invalid_argument("joint pmf: names and sizes differ in length");
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("joint pmf: too many variables");
  double states = 1;
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("joint pmf: alphabet sizes must be positive");
    states *= s;
  }
  if (states > 1.8e19) throw std::invalid_argument("joint pmf: outcome space too large to index");
}

int JointPmf::var(std::string_view name) const {
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j] == name) return static_cast<int>(j);
  }
  throw std::invalid_argument("joint pmf: unknown variable " + std::string(name));
}

JointPmf::VarSet JointPmf::set(std::initializer_list<std::string_view> names) const {
  VarSet s = 0;
  for (auto n : names) s |= VarSet{1} << var(n);
  return s;
}

std::uint64_t JointPmf::code(const std::vector<int>& outcome, VarSet vars) const {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    if ((vars >> j) & 1U) c = c * static_cast<std::uint64_t>(sizes_[j]) + static_cast<std::uint64_t>(outcome[j]);
  }
  return c;
}

void JointPmf::add(const std::vector<int>& outcome, const Rational& p) {
  if (outcome.size() != sizes_.size()) throw std::invalid_argument("joint pmf: outcome has wrong arity");
  for (std::size_t j = 0; j < outcome.size(); ++j) {
    if (outcome[j] < 0 || outcome[j] >= sizes_[j]) throw std::invalid_argument("joint pmf: outcome out of range");
  }
  if (p < 0) throw std::invalid_argument("joint pmf: negative probability");
  if (p == 0) return;
  cache_.clear();
  const VarSet all = names_.size() == 32 ? ~VarSet{0} : (VarSet{1} << names_.size()) - 1;
  const auto c = code(outcome, all);
  auto it = index_.find(c);
  if (it != index_.end()) {
    atoms_[it->second].p += p;
    return;
  }
  index_.emplace(c, atoms_.size());
  atoms_.push_back({outcome, p});
}

Rational JointPmf::total() const {
  Rational s = 0;
  for (const auto& a : atoms_) s += a.p;
  return s;
}

void JointPmf::require_normalized() const {
  if (total() != 1) throw std::invalid_argument("joint pmf: masses sum to " + to_fraction_string(total()));
}

std::unordered_map<std::uint64_t, Rational> JointPmf::marginal(VarSet vars) const {
  std::unordered_map<std::uint64_t, Rational> m;
  for (const auto& a : atoms_) m[code(a.outcome, vars)] += a.p;
  return m;
}

double JointPmf::entropy(VarSet vars) const {
  if (vars == 0) return 0;
  if (auto it = cache_.find(vars); it != cache_.end()) return it->second;
  double h = 0;
  for (const auto& [k, p] : marginal(vars)) {
    const double x = p.get_d();
    if (x > 0) h -= x * std::log2(x);
  }
  cache_.emplace(vars, h);
  return h;
}

double JointPmf::entropy(VarSet x, VarSet given) const { return entropy(x | given) - entropy(given); }

double JointPmf::mutual_information(VarSet x, VarSet y, VarSet given) const {
  return entropy(x | given) + entropy(y | given) - entropy(x | y | given) - entropy(given);
}

double entropy_bits(const std::vector<Rational>& probabilities) {
  double h = 0;
  for (const auto& p : probabilities) {
    const double x = p.get_d();
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace macic
