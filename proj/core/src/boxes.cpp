#include "ewb/boxes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ewb/errors.hpp"

namespace ewb {

namespace {

// Positions p (1-based) such that a bar sits between letters p and p+1.
std::vector<bool> boundaries(const std::vector<int>& blocks, int n) {
  std::vector<bool> bar(static_cast<std::size_t>(n) + 1, false);
  int prefix = 0;
  for (int size : blocks) {
    prefix += size;
    if (prefix > 0 && prefix < n) bar[static_cast<std::size_t>(prefix)] = true;
  }
  return bar;
}

bool descents_on_bars(std::span<const int> w, const std::vector<int>& blocks) {
  const int n = static_cast<int>(w.size());
  const auto bar = boundaries(blocks, n);
  for (int p = 1; p < n; ++p) {
    if (w[static_cast<std::size_t>(p - 1)] > w[static_cast<std::size_t>(p)] && !bar[static_cast<std::size_t>(p)]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string BarredPermutation::shorthand() const {
  const bool compact = underlying.size() <= 9;
  std::string out;
  int pos = 1;
  for (std::size_t b = 0; b < box_sizes.size(); ++b) {
    if (b != 0) out += '|';
    for (int i = 0; i < box_sizes[b]; ++i, ++pos) {
      if (!compact && i != 0) out += ',';
      out += std::to_string(underlying(pos));
    }
  }
  return out;
}

bool BarredPermutation::bars_cover_descents() const { return descents_on_bars(underlying.letters(), box_sizes); }

BarredPermutation assignment_to_barred(const BoxAssignment& a) {
  if (a.n() < 1) throw InvalidInput("at least one ball is required");
  std::vector<std::vector<int>> boxes(static_cast<std::size_t>(std::max(a.k, 0)));
  for (int ball = 1; ball <= a.n(); ++ball) {
    const int box = a.box_of[static_cast<std::size_t>(ball - 1)];
    if (box < 1 || box > a.k) throw InvalidInput("ball " + std::to_string(ball) + " assigned outside 1..k");
    boxes[static_cast<std::size_t>(box - 1)].push_back(ball);  // balls visited in increasing order
  }
  std::vector<int> letters;
  std::vector<int> sizes;
  letters.reserve(a.box_of.size());
  for (const auto& box : boxes) {
    letters.insert(letters.end(), box.begin(), box.end());
    sizes.push_back(static_cast<int>(box.size()));
  }
  return BarredPermutation{Permutation(std::move(letters)), std::move(sizes)};
}

Count count_barred(const Permutation& w, int k) {
  if (k < 0) throw InvalidInput("box count must be nonnegative");
  return binomial(static_cast<std::int64_t>(k) + w.size() - 1 - descent_count(w), w.size());
}

Census oracle_barred_census(int n, int k) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (k < 0) throw InvalidInput("box count must be nonnegative");
  if (power(k, static_cast<unsigned>(n)) > kBarredCensusBudget) {
    throw GuardRailError("k^n exceeds the barred census budget of " + std::to_string(kBarredCensusBudget));
  }
  Census census;
  if (k == 0) return census;

  BoxAssignment a{k, std::vector<int>(static_cast<std::size_t>(n), 1)};
  while (true) {
    census[assignment_to_barred(a).underlying] += 1;
    // odometer over box_of
    std::size_t digit = 0;
    while (digit < a.box_of.size() && a.box_of[digit] == k) a.box_of[digit++] = 1;
    if (digit == a.box_of.size()) break;
    ++a.box_of[digit];
  }
  return census;
}

int GridPlacement::ball_count() const {
  int total = 0;
  for (const auto& c : cells) total += c.multiplicity;
  return total;
}

bool TwoSidedBarred::bars_cover_descents() const {
  return descents_on_bars(underlying.letters(), column_blocks) &&
         descents_on_bars(inverse(underlying).letters(), row_blocks);
}

TwoSidedBarred grid_placement_to_permutation(const GridPlacement& g) {
  struct Ball {
    int column;
    int row;
    int diagonal;
  };
  std::vector<Ball> balls;
  std::vector<int> column_blocks(static_cast<std::size_t>(std::max(g.columns, 0)), 0);
  std::vector<int> row_blocks(static_cast<std::size_t>(std::max(g.rows, 0)), 0);
  for (const auto& cell : g.cells) {
    if (cell.column < 1 || cell.column > g.columns || cell.row < 1 || cell.row > g.rows) {
      throw InvalidInput("grid cell outside the " + std::to_string(g.columns) + "x" + std::to_string(g.rows) + " grid");
    }
    if (cell.multiplicity < 1) throw InvalidInput("cell multiplicity must be positive");
    for (int d = 0; d < cell.multiplicity; ++d) balls.push_back({cell.column, cell.row, d});
    column_blocks[static_cast<std::size_t>(cell.column - 1)] += cell.multiplicity;
    row_blocks[static_cast<std::size_t>(cell.row - 1)] += cell.multiplicity;
  }
  if (balls.empty()) throw InvalidInput("placement has no balls");

  // Several entries for the same cell are allowed; their diagonal indices
  // must continue rather than restart.
  std::map<std::pair<int, int>, int> next_diagonal;
  for (auto& b : balls) b.diagonal = next_diagonal[{b.column, b.row}]++;

  const std::size_t n = balls.size();
  std::vector<std::size_t> by_column(n);
  std::vector<std::size_t> by_row(n);
  std::iota(by_column.begin(), by_column.end(), 0);
  std::iota(by_row.begin(), by_row.end(), 0);
  std::sort(by_column.begin(), by_column.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(balls[a].column, balls[a].row, balls[a].diagonal) <
           std::tie(balls[b].column, balls[b].row, balls[b].diagonal);
  });
  std::sort(by_row.begin(), by_row.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(balls[a].row, balls[a].column, balls[a].diagonal) <
           std::tie(balls[b].row, balls[b].column, balls[b].diagonal);
  });

  std::vector<int> row_rank(n);
  for (std::size_t r = 0; r < n; ++r) row_rank[by_row[r]] = static_cast<int>(r) + 1;
  std::vector<int> letters(n);
  for (std::size_t c = 0; c < n; ++c) letters[c] = row_rank[by_column[c]];

  return TwoSidedBarred{Permutation(std::move(letters)), std::move(column_blocks), std::move(row_blocks)};
}

Count count_two_sided(const Permutation& w, int columns, int rows) {
  if (columns < 0 || rows < 0) throw InvalidInput("grid dimensions must be nonnegative");
  const int n = w.size();
  return binomial(static_cast<std::int64_t>(rows) + n - 1 - inverse_descent_count(w), n) *
         binomial(static_cast<std::int64_t>(columns) + n - 1 - descent_count(w), n);
}

Census oracle_two_sided_census(int n, int columns, int rows) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (columns < 0 || rows < 0) throw InvalidInput("grid dimensions must be nonnegative");
  const std::int64_t cells = static_cast<std::int64_t>(columns) * rows;
  if (binomial(cells + n - 1, n) > kTwoSidedCensusBudget) {
    throw GuardRailError("placement count exceeds the two-sided census budget of " +
                         std::to_string(kTwoSidedCensusBudget));
  }
  Census census;
  if (cells == 0) return census;

  // Nondecreasing sequences of cell indices = multisets of n cells.
  std::vector<std::int64_t> pick(static_cast<std::size_t>(n), 0);
  GridPlacement g{columns, rows, {}};
  while (true) {
    g.cells.clear();
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const int column = static_cast<int>(pick[i] / rows) + 1;
      const int row = static_cast<int>(pick[i] % rows) + 1;
      if (i > 0 && pick[i] == pick[i - 1]) {
        ++g.cells.back().multiplicity;
      } else {
        g.cells.push_back({column, row, 1});
      }
    }
    census[grid_placement_to_permutation(g).underlying] += 1;

    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == cells - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[i - 1];
  }
  return census;
}

}  // namespace ewb
