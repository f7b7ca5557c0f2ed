#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macic {

/// One of the two cells of the network.
enum class Cell : std::uint8_t { a = 0, b = 1 };

inline constexpr Cell kCells[] = {Cell::a, Cell::b};

constexpr Cell other(Cell c) { return c == Cell::a ? Cell::b : Cell::a; }
constexpr int index(Cell c) { return static_cast<int>(c); }
constexpr char name(Cell c) { return c == Cell::a ? 'a' : 'b'; }

/// Upsilon subsets always contain the interfering user (bit 0); omega subsets
/// are arbitrary nonempty subsets of a cell.
enum class SubsetKind : std::uint8_t { upsilon, omega };

/// Largest per-cell user count the bitmask tables accept.
inline constexpr int kMaxUsersPerCell = 16;

struct SubsetMask {
  Cell cell = Cell::a;
  std::uint32_t bits = 0;

  bool contains(int user) const { return (bits >> user) & 1U; }
  int size() const;
  bool includes_interferer() const { return contains(0); }
  /// e.g. "{a0,a1}"
  std::string to_string() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

/// Ascending masks of the given kind for a cell of `users` users.
/// Throws std::invalid_argument for users < 1 or users > kMaxUsersPerCell.
std::vector<SubsetMask> enum_subsets(int users, SubsetKind kind, Cell cell = Cell::a);

bool is_admissible(std::uint32_t bits, int users, SubsetKind kind);

}  // namespace macic
