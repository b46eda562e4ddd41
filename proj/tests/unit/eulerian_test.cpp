#include <gtest/gtest.h>

#include <cstdlib>

#include "ewb/errors.hpp"
#include "ewb/eulerian.hpp"
#include "support/oracles.hpp"
#include "support/reference_tables.hpp"

namespace ewb {
namespace {

std::vector<Count> counts(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

UniPoly U(std::initializer_list<int> c) { return UniPoly(counts(c)); }

bool long_run() {
  const char* flag = std::getenv("EWB_LONG_TESTS");
  return flag != nullptr && std::string(flag) == "1";
}

TEST(EulerianBruteForce, Examples) {
  EXPECT_EQ(table_brute_force(1), counts({1}));
  EXPECT_EQ(table_brute_force(3), counts({1, 4, 1}));
  EXPECT_EQ(table_brute_force(8), counts({1, 247, 4293, 15619, 15619, 4293, 247, 1}));
}

TEST(EulerianBruteForce, MatchesDefinitionOracle) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(table_brute_force(n), testing::eulerian_row(n)) << "n=" << n;
}

TEST(EulerianBruteForce, ShardCountDoesNotChangeResult) {
  const auto single = table_brute_force(9, {1, false});
  for (std::size_t shards : {2u, 3u, 8u, 17u}) EXPECT_EQ(table_brute_force(9, {shards, false}), single);
}

TEST(EulerianBruteForce, GuardRail) {
  EXPECT_THROW(table_brute_force(12), GuardRailError);
  EXPECT_THROW(table_brute_force(0), InvalidInput);
}

TEST(EulerianRecurrence, MatchesReferenceTriangle) {
  const EulerianTable t = table_from_recurrence(8);
  for (int n = 1; n <= 8; ++n) {
    const auto& ref = testing::kEulerianTriangle[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i <= n; ++i) EXPECT_EQ(t.at(n, i), ref[static_cast<std::size_t>(i - 1)]) << n << "," << i;
  }
  EXPECT_EQ(t.at(5, 0), 0);
  EXPECT_EQ(t.at(5, 6), 0);
  EXPECT_EQ(t.row(2).size(), 2u);
}

TEST(EulerianRecurrence, AgreesWithBruteForce) {
  const EulerianTable t = table_from_recurrence(9);
  for (int n = 1; n <= 9; ++n) {
    const auto row = t.row(n);
    EXPECT_EQ(table_brute_force(n), std::vector<Count>(row.begin(), row.end())) << "n=" << n;
  }
}

TEST(EulerianRecurrence, AgreesWithBruteForceLongRun) {
  if (!long_run()) GTEST_SKIP() << "set EWB_LONG_TESTS=1 for n = 10, 11";
  const EulerianTable t = table_from_recurrence(11);
  for (int n = 10; n <= 11; ++n) {
    const auto row = t.row(n);
    EXPECT_EQ(table_brute_force(n, {4, false}), std::vector<Count>(row.begin(), row.end()));
  }
}

TEST(EulerianRecurrence, SymmetricRowsSummingToFactorial) {
  const EulerianTable t = table_from_recurrence(40);
  for (int n = 1; n <= 40; ++n) {
    Count sum = 0;
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(t.at(n, i), t.at(n, n + 1 - i));
      sum += t.at(n, i);
    }
    EXPECT_EQ(sum, testing::fact(n)) << "n=" << n;
  }
}

TEST(EulerianPolynomial, Examples) {
  EXPECT_EQ(eulerian_polynomial(4), U({0, 1, 11, 11, 1}));
  EXPECT_EQ(eulerian_polynomial(5), U({0, 1, 26, 66, 26, 1}));
  EXPECT_EQ(eulerian_polynomial(1), U({0, 1}));
  EXPECT_EQ(eulerian_polynomial(6, Source::brute_force), eulerian_polynomial(6, Source::recurrence));
}

TEST(PowerSeriesWindow, Examples) {
  const SeriesCheck three = check_power_series_window(3, 5);
  EXPECT_TRUE(three.pass);
  EXPECT_EQ(three.computed, counts({0, 1, 8, 27, 64, 125}));
  EXPECT_EQ(check_power_series_window(1, 4).computed, counts({0, 1, 2, 3, 4}));
  const SeriesCheck eight = check_power_series_window(8, 20);
  EXPECT_TRUE(eight.pass);
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(eight.computed[static_cast<std::size_t>(k)], testing::ipow(k, 8));
}

TEST(PowerSeriesWindow, HoldsAcrossSizes) {
  for (int n = 1; n <= 15; ++n) {
    const SeriesCheck s = check_power_series_window(n, 12);
    EXPECT_TRUE(s.pass) << "n=" << n;
    EXPECT_FALSE(s.first_mismatch.has_value());
  }
}

TEST(Worpitzky, Examples) {
  const EulerianTable t = table_from_recurrence(8);
  EXPECT_EQ(worpitzky(4, 3, t), 81);
  EXPECT_EQ(worpitzky(1, 7, t), 7);
  EXPECT_EQ(worpitzky(5, 2, t), 32);
}

TEST(Worpitzky, FullGrid) {
  const EulerianTable t = table_from_recurrence(8);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(worpitzky(n, k, t), testing::ipow(k, n));
  }
}

TEST(Worpitzky, CorruptedTableIsReported) {
  auto rows = std::vector<std::vector<Count>>{counts({1}), counts({1, 1}), counts({1, 5, 1})};
  const EulerianTable bad(rows);
  EXPECT_THROW(worpitzky(3, 2, bad), CheckFailure);
}

TEST(DerivativeRecurrence, HoldsIncludingLargeN) {
  const EulerianTable t = table_from_recurrence(20);
  for (int n : {2, 4, 9, 20}) {
    const PolyCheck c = check_derivative_recurrence(n, t);
    EXPECT_TRUE(c.pass) << "n=" << n << " " << c.detail;
  }
  auto rows = std::vector<std::vector<Count>>{counts({1}), counts({1, 1}), counts({1, 4, 2})};
  const PolyCheck broken = check_derivative_recurrence(3, EulerianTable(rows));
  EXPECT_FALSE(broken.pass);
  EXPECT_FALSE(broken.detail.empty());
}

TEST(GammaExtract, Examples) {
  EXPECT_EQ(gamma_extract(eulerian_polynomial(4), 4).gammas, counts({1, 8}));
  EXPECT_EQ(gamma_extract(eulerian_polynomial(5), 5).gammas, counts({1, 22, 16}));
  const UniPoly basis = UniPoly::one_plus_t_pow(2).shifted(1);  // t(1+t)^2
  EXPECT_EQ(gamma_extract(basis, 3).gammas, counts({1, 0}));
}

TEST(GammaExtract, RejectsNonPalindromicInput) {
  EXPECT_THROW(gamma_extract(U({0, 1, 2}), 2), InvalidInput);
  EXPECT_THROW(gamma_extract(U({0, 1, 11, 12, 1}), 4), InvalidInput);
}

TEST(GammaExtract, ReportsNegativeGammas) {
  // t(1+t)^2 - t^2 = t + t^2 + t^3
  const GammaVector g = gamma_extract(U({0, 1, 1, 1}), 3);
  EXPECT_EQ(g.gammas, (std::vector<Count>{1, -1}));
  EXPECT_FALSE(g.nonnegative());
  EXPECT_EQ(g.reconstruct(), U({0, 1, 1, 1}));
}

TEST(GammaExtract, NonnegativeAndConsistentUpTo40) {
  const EulerianTable t = table_from_recurrence(40);
  for (int n = 1; n <= 40; ++n) {
    const UniPoly a = eulerian_polynomial(t.row(n));
    const GammaVector g = gamma_extract(a, n);
    EXPECT_TRUE(g.nonnegative()) << "n=" << n;
    EXPECT_EQ(g.reconstruct(), a);
    Count at_one = 0;
    for (std::size_t i = 1; i <= g.gammas.size(); ++i) {
      at_one += g.gammas[i - 1] * testing::ipow(2, n + 1 - 2 * static_cast<int>(i));
    }
    EXPECT_EQ(at_one, testing::fact(n)) << "n=" << n;
  }
}

TEST(Unimodality, Examples) {
  const EulerianTable t = table_from_recurrence(7);
  EXPECT_TRUE(check_unimodality(t.row(7)));
  EXPECT_FALSE(check_unimodality(counts({1, 3, 2, 3, 1})));
  EXPECT_TRUE(check_unimodality(counts({1})));
  EXPECT_TRUE(check_unimodality(counts({})));
}

}  // namespace
}  // namespace ewb
