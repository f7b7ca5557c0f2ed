#include "macic/subsets.hpp"

#include <bit>
#include <stdexcept>

namespace macic {

int SubsetMask::size() const { return std::popcount(bits); }

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!contains(j)) continue;
    if (!first) out += ',';
    out += name(cell);
    out += std::to_string(j);
    first = false;
  }
  out += '}';
  return out;
}

bool is_admissible(std::uint32_t bits, int users, SubsetKind kind) {
  if (users < 1 || users > kMaxUsersPerCell) return false;
  if (bits == 0 || bits >= (1U << users)) return false;
  return kind == SubsetKind::omega || (bits & 1U) != 0;
}

std::vector<SubsetMask> enum_subsets(int users, SubsetKind kind, Cell cell) {
  if (users < 1) throw std::invalid_argument("enum_subsets: a cell needs at least one user");
  if (users > kMaxUsersPerCell) throw std::invalid_argument("enum_subsets: too many users in a cell");

  std::vector<SubsetMask> out;
  const std::uint32_t limit = 1U << users;
  if (kind == SubsetKind::upsilon) {
    out.reserve(limit / 2);
    for (std::uint32_t bits = 1; bits < limit; bits += 2) out.push_back({cell, bits});
  } else {
    out.reserve(limit - 1);
    for (std::uint32_t bits = 1; bits < limit; ++bits) out.push_back({cell, bits});
  }
  return out;
}

}  // namespace macic
