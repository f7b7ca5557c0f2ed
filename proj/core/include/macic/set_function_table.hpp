#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macic/errors.hpp"
#include "macic/rational.hpp"
#include "macic/subsets.hpp"

namespace macic {

/// The four set functions parameterizing the generic two-cell region.
/// A and E are indexed by upsilon masks, B and G by omega masks.
enum class SetFn : std::uint8_t { A = 0, B = 1, E = 2, G = 3 };

inline constexpr SetFn kSetFns[] = {SetFn::A, SetFn::B, SetFn::E, SetFn::G};

constexpr SubsetKind domain(SetFn f) {
  return (f == SetFn::A || f == SetFn::E) ? SubsetKind::upsilon : SubsetKind::omega;
}
constexpr char name(SetFn f) { return "ABEG"[static_cast<int>(f)]; }

/// Values of A, B, E, G on every admissible mask of both cells.
template <class T>
class BasicSetFunctionTable {
 public:
  BasicSetFunctionTable() = default;
  BasicSetFunctionTable(int users_a, int users_b) : users_{users_a, users_b} {
    for (Cell c : kCells) {
      if (users(c) < 1 || users(c) > kMaxUsersPerCell) {
        throw std::invalid_argument("set function table: per-cell user count out of range");
      }
      for (auto& fn : values_[index(c)]) fn.assign(std::size_t{1} << users(c), std::nullopt);
    }
  }

  int users(Cell c) const { return users_[index(c)]; }

  bool has(SetFn f, Cell c, std::uint32_t mask) const {
    return is_admissible(mask, users(c), domain(f)) && slot(f, c, mask).has_value();
  }

  const T& get(SetFn f, Cell c, std::uint32_t mask) const {
    if (!is_admissible(mask, users(c), domain(f))) {
      throw MissingEntryError(std::string("set function ") + name(f) + ": mask " +
                              SubsetMask{c, mask}.to_string() + " is not admissible");
    }
    const auto& v = slot(f, c, mask);
    if (!v) {
      throw MissingEntryError(std::string("set function ") + name(f) + " has no entry for " +
                              SubsetMask{c, mask}.to_string());
    }
    return *v;
  }

  void set(SetFn f, Cell c, std::uint32_t mask, T value) {
    if (!is_admissible(mask, users(c), domain(f))) {
      throw std::invalid_argument(std::string("set function ") + name(f) + ": mask " +
                                  SubsetMask{c, mask}.to_string() + " is not admissible");
    }
    values_[index(c)][static_cast<int>(f)][mask] = std::move(value);
  }

  /// Every admissible entry of every function is present.
  bool complete() const {
    for (Cell c : kCells) {
      for (SetFn f : kSetFns) {
        for (const auto& m : enum_subsets(users(c), domain(f), c)) {
          if (!slot(f, c, m.bits)) return false;
        }
      }
    }
    return true;
  }

  /// Throws MissingEntryError naming the first absent entry.
  void require_complete() const {
    for (Cell c : kCells) {
      for (SetFn f : kSetFns) {
        for (const auto& m : enum_subsets(users(c), domain(f), c)) get(f, c, m.bits);
      }
    }
  }

  const T& A(Cell c, std::uint32_t m) const { return get(SetFn::A, c, m); }
  const T& B(Cell c, std::uint32_t m) const { return get(SetFn::B, c, m); }
  const T& E(Cell c, std::uint32_t m) const { return get(SetFn::E, c, m); }
  const T& G(Cell c, std::uint32_t m) const { return get(SetFn::G, c, m); }

 private:
  const std::optional<T>& slot(SetFn f, Cell c, std::uint32_t mask) const {
    return values_[index(c)][static_cast<int>(f)][mask];
  }

  std::array<int, 2> users_{0, 0};
  std::array<std::array<std::vector<std::optional<T>>, 4>, 2> values_;
};

using SetFunctionTable = BasicSetFunctionTable<Rational>;
using RealSetFunctionTable = BasicSetFunctionTable<double>;

/// Rounds every entry to the nearest multiple of 2^-bits and logs the largest
/// rounding error at debug level.
SetFunctionTable rationalize(const RealSetFunctionTable& table, int bits = kDyadicBits);

RealSetFunctionTable to_real(const SetFunctionTable& table);

/// A violated structural relation, e.g. "A{a0} > E{a0}".
struct TableViolation {
  std::string what;
  double amount = 0;
};

/// Chain-rule relations A <= E (upsilon masks) and B <= G (omega masks).
std::vector<TableViolation> chain_rule_violations(const RealSetFunctionTable& t, double tolerance);
std::vector<TableViolation> chain_rule_violations(const SetFunctionTable& t);

/// Every value >= -tolerance.
std::vector<TableViolation> negativity_violations(const RealSetFunctionTable& t, double tolerance);
std::vector<TableViolation> negativity_violations(const SetFunctionTable& t);

/// Each function nondecreasing when one user is added to its mask.
std::vector<TableViolation> monotonicity_violations(const RealSetFunctionTable& t, double tolerance);

}  // namespace macic
