#include <gtest/gtest.h>

#include <set>

#include "ewb/boxes.hpp"
#include "ewb/errors.hpp"
#include "support/oracles.hpp"

namespace ewb {
namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Count census_at(const Census& c, const Permutation& w) {
  const auto it = c.find(w);
  return it == c.end() ? Count(0) : it->second;
}

TEST(BarredPermutation, NineBoxExample) {
  const BarredPermutation b = assignment_to_barred({9, {6, 4, 9, 6, 3, 3}});
  EXPECT_EQ(b.underlying.str(), "562143");
  EXPECT_EQ(b.shorthand(), "||56|2||14|||3");
  EXPECT_EQ(b.box_sizes, (std::vector<int>{0, 0, 2, 1, 0, 2, 0, 0, 1}));
  EXPECT_TRUE(b.bars_cover_descents());
}

TEST(BarredPermutation, SmallCases) {
  const BarredPermutation one_box = assignment_to_barred({1, {1, 1, 1, 1}});
  EXPECT_EQ(one_box.underlying, Permutation::identity(4));
  EXPECT_EQ(one_box.shorthand(), "1234");

  const BarredPermutation forced = assignment_to_barred({2, {2, 1}});
  EXPECT_EQ(forced.underlying.str(), "21");
  EXPECT_EQ(forced.box_sizes, (std::vector<int>{1, 1}));
  EXPECT_EQ(forced.shorthand(), "2|1");
  EXPECT_THROW(assignment_to_barred({2, {3, 1}}), InvalidInput);
}

TEST(CountBarred, Examples) {
  EXPECT_EQ(count_barred(P("562143"), 4), 1);
  EXPECT_EQ(count_barred(Permutation::identity(5), 1), 1);
  EXPECT_EQ(count_barred(P("21"), 2), 1);
  EXPECT_EQ(count_barred(P("21"), 1), 0);
  EXPECT_EQ(count_barred(P("562143"), 3), 0);
}

TEST(BarredCensus, Examples) {
  const Census c = oracle_barred_census(3, 2);
  Count total = 0;
  for (const auto& [w, k] : c) total += k;
  EXPECT_EQ(total, 8);
  EXPECT_EQ(census_at(c, Permutation::identity(3)), 4);

  const Census single = oracle_barred_census(1, 5);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.begin()->second, 5);

  const Census one_box = oracle_barred_census(3, 1);
  ASSERT_EQ(one_box.size(), 1u);
  EXPECT_EQ(one_box.begin()->first, Permutation::identity(3));
}

TEST(BarredCensus, MatchesClosedFormExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const Census c = oracle_barred_census(n, k);
      for (const auto& w : enumerate_sn(n)) {
        ASSERT_EQ(census_at(c, w), count_barred(w, k)) << w.str() << " k=" << k;
      }
    }
  }
}

TEST(BarredCensus, ClosedFormRowSumsArePowers) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      Count total = 0;
      for (const auto& w : enumerate_sn(n)) total += count_barred(w, k);
      EXPECT_EQ(total, testing::ipow(k, n)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(BarredCensus, BudgetGuard) { EXPECT_THROW(oracle_barred_census(12, 5), GuardRailError); }

TEST(GridPlacement, SevenBallExample) {
  const GridPlacement g{5, 4, {{1, 1, 1}, {1, 4, 1}, {2, 1, 1}, {3, 1, 2}, {3, 3, 1}, {5, 1, 1}}};
  EXPECT_EQ(g.ball_count(), 7);
  const TwoSidedBarred b = grid_placement_to_permutation(g);
  EXPECT_EQ(b.underlying.str(), "1723465");
  EXPECT_EQ(b.column_blocks, (std::vector<int>{2, 1, 3, 0, 1}));
  EXPECT_EQ(b.row_blocks, (std::vector<int>{5, 0, 1, 1}));
  EXPECT_TRUE(b.bars_cover_descents());
}

TEST(GridPlacement, SmallCases) {
  EXPECT_EQ(grid_placement_to_permutation({1, 1, {{1, 1, 5}}}).underlying, Permutation::identity(5));
  EXPECT_EQ(grid_placement_to_permutation({2, 2, {{1, 2, 1}, {2, 1, 1}}}).underlying.str(), "21");
  // Entries for the same cell continue along the diagonal.
  EXPECT_EQ(grid_placement_to_permutation({1, 1, {{1, 1, 1}, {1, 1, 1}}}).underlying.str(), "12");
  EXPECT_THROW(grid_placement_to_permutation({2, 2, {{3, 1, 1}}}), InvalidInput);
  EXPECT_THROW(grid_placement_to_permutation({2, 2, {}}), InvalidInput);
}

TEST(CountTwoSided, Examples) {
  EXPECT_EQ(count_two_sided(Permutation::identity(4), 1, 1), 1);
  EXPECT_EQ(count_two_sided(P("21"), 2, 2), 1);
  for (const auto& w : enumerate_sn(5)) {
    for (int c = 0; c <= descent_count(w); ++c) EXPECT_EQ(count_two_sided(w, c, 4), 0);
  }
}

TEST(TwoSidedCensus, Examples) {
  auto total = [](const Census& c) {
    Count t = 0;
    for (const auto& [w, k] : c) t += k;
    return t;
  };
  EXPECT_EQ(total(oracle_two_sided_census(2, 2, 2)), 10);
  const Census c = oracle_two_sided_census(3, 2, 2);
  EXPECT_EQ(total(c), 20);
  for (const auto& w : enumerate_sn(3)) EXPECT_EQ(census_at(c, w), count_two_sided(w, 2, 2));
  EXPECT_EQ(census_at(oracle_two_sided_census(2, 2, 2), P("21")), 1);
}

TEST(TwoSidedCensus, MatchesClosedFormExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    for (int c = 0; c <= 3; ++c) {
      for (int r = 0; r <= 3; ++r) {
        const Census census = oracle_two_sided_census(n, c, r);
        Count total = 0;
        for (const auto& w : enumerate_sn(n)) {
          ASSERT_EQ(census_at(census, w), count_two_sided(w, c, r)) << w.str() << " " << c << "x" << r;
          total += census_at(census, w);
        }
        EXPECT_EQ(total, testing::pascal(c * r + n - 1, n));
      }
    }
  }
}

// Distinct placements in a fixed grid give distinct two-sided barred
// permutations, and every result has its bars on the required descents.
TEST(TwoSidedCensus, StandardizationIsInjective) {
  for (int n = 1; n <= 4; ++n) {
    for (int c = 1; c <= 3; ++c) {
      for (int r = 1; r <= 3; ++r) {
        const int cells = c * r;
        std::set<std::vector<int>> seen;
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::size_t placements = 0;
        while (true) {
          GridPlacement g{c, r, {}};
          for (int idx : pick) g.cells.push_back({idx / r + 1, idx % r + 1, 1});
          const TwoSidedBarred b = grid_placement_to_permutation(g);
          ASSERT_TRUE(b.bars_cover_descents());
          std::vector<int> key(b.underlying.letters().begin(), b.underlying.letters().end());
          key.insert(key.end(), b.column_blocks.begin(), b.column_blocks.end());
          key.insert(key.end(), b.row_blocks.begin(), b.row_blocks.end());
          seen.insert(key);
          ++placements;

          std::size_t i = pick.size();
          while (i > 0 && pick[i - 1] == cells - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[i - 1];
        }
        EXPECT_EQ(seen.size(), placements);
        EXPECT_EQ(Count(placements), testing::pascal(cells + n - 1, n));
      }
    }
  }
}

TEST(TwoSidedCensus, BudgetGuard) { EXPECT_THROW(oracle_two_sided_census(10, 6, 6), GuardRailError); }

}  // namespace
}  // namespace ewb
