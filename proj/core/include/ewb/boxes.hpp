#pragma once

// Balls-in-boxes oracles. These enumerate the objects directly and serve as
// ground truth for the closed forms count_barred / count_two_sided.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ewb/exactnum.hpp"
#include "ewb/perm.hpp"

namespace ewb {

/// n labeled balls in k ordered boxes; box_of[b-1] is the box of ball b (1-based).
struct BoxAssignment {
  int k = 0;
  std::vector<int> box_of;
  int n() const { return static_cast<int>(box_of.size()); }
};

/// Underlying permutation plus the size of each of the k boxes.
struct BarredPermutation {
  Permutation underlying;
  std::vector<int> box_sizes;

  /// Shorthand with '|' between boxes, e.g. "||56|2||14|||3".
  std::string shorthand() const;
  /// True iff every descent of the underlying permutation sits on a bar.
  bool bars_cover_descents() const;
};

BarredPermutation assignment_to_barred(const BoxAssignment& a);

/// binom(k + n - 1 - des(w), n): barred permutations of w with k boxes.
Count count_barred(const Permutation& w, int k);

inline constexpr std::uint64_t kBarredCensusBudget = 100'000'000;
inline constexpr std::uint64_t kTwoSidedCensusBudget = 10'000'000;

using Census = std::map<Permutation, Count>;

/// Enumerates all k^n assignments and tallies them by underlying permutation.
/// Throws GuardRailError when k^n exceeds kBarredCensusBudget.
Census oracle_barred_census(int n, int k);

struct GridCell {
  int column = 1;
  int row = 1;
  int multiplicity = 1;
};

/// A multiset of cells in a columns x rows grid of boxes.
struct GridPlacement {
  int columns = 0;
  int rows = 0;
  std::vector<GridCell> cells;
  int ball_count() const;
};

/// Permutation matrix refined by vertical (column) and horizontal (row) bars.
/// column_blocks[c] is the number of balls in box-column c, row_blocks likewise.
struct TwoSidedBarred {
  Permutation underlying;
  std::vector<int> column_blocks;
  std::vector<int> row_blocks;

  /// Vertical bars cover des(w) positions and horizontal bars cover des(w^-1).
  bool bars_cover_descents() const;
  friend bool operator==(const TwoSidedBarred&, const TwoSidedBarred&) = default;
};

/// Standardizes a placement: balls sharing a cell are laid out diagonally,
/// bottom-left to top-right.
TwoSidedBarred grid_placement_to_permutation(const GridPlacement& g);

/// binom(rows + n - 1 - ides(w), n) * binom(columns + n - 1 - des(w), n)
Count count_two_sided(const Permutation& w, int columns, int rows);

/// Enumerates all multisets of n cells in the grid and standardizes each.
/// Throws GuardRailError when binom(columns*rows + n - 1, n) exceeds kTwoSidedCensusBudget.
Census oracle_two_sided_census(int n, int columns, int rows);

}  // namespace ewb
