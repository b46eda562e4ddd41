#include <gtest/gtest.h>

#include <set>

#include "ewb/errors.hpp"
#include "ewb/eulerian.hpp"
#include "ewb/hopping.hpp"
#include "ewb/serialize.hpp"
#include "ewb/twosided.hpp"

namespace ewb {
namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(ClassifyLetters, Examples) {
  const Permutation w = P("863247159");
  const LetterClass c = classify_letters(w);
  EXPECT_EQ(c.peaks(w), (std::vector<int>{7}));
  EXPECT_EQ(c.valleys(w), (std::vector<int>{2, 1}));
  EXPECT_EQ(c.free_letters(w), (std::vector<int>{8, 6, 3, 4, 5, 9}));
  EXPECT_EQ(c.peak_count(), 1);

  const Permutation id = Permutation::identity(6);
  const LetterClass ci = classify_letters(id);
  EXPECT_EQ(ci.valleys(id), (std::vector<int>{1}));
  EXPECT_EQ(ci.free_letters(id), (std::vector<int>{2, 3, 4, 5, 6}));
  EXPECT_TRUE(ci.peaks(id).empty());

  const Permutation w132 = P("132");
  const LetterClass c132 = classify_letters(w132);
  EXPECT_EQ(c132.valleys(w132), (std::vector<int>{1, 2}));
  EXPECT_EQ(c132.peaks(w132), (std::vector<int>{3}));
  EXPECT_TRUE(c132.free_letters(w132).empty());
}

TEST(Hop, Examples) {
  EXPECT_EQ(hop(P("123"), 2).str(), "213");
  EXPECT_EQ(hop(P("213"), 3).str(), "321");
  EXPECT_EQ(hop(P("321"), 3).str(), "213");
  EXPECT_THROW(hop(P("132"), 3), InvalidInput);
  EXPECT_THROW(hop(P("132"), 1), InvalidInput);
  EXPECT_THROW(hop(P("123"), 4), InvalidInput);
}

TEST(Hop, InvolutionAndCommutingExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : enumerate_sn(n)) {
      const auto free = classify_letters(w).free_letters(w);
      for (int x : free) {
        const Permutation u = hop(w, x);
        ASSERT_EQ(hop(u, x), w) << w.str() << " x=" << x;
        for (int y : free) {
          if (y != x) ASSERT_EQ(hop(hop(w, x), y), hop(hop(w, y), x)) << w.str() << " " << x << "," << y;
        }
      }
    }
  }
}

TEST(Hop, DescentsAreCountedByPeaksAndDoubleDescentsExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : enumerate_sn(n)) {
      const LetterClass c = classify_letters(w);
      ASSERT_EQ(descent_count(w), c.peak_count() + c.double_descent_count()) << w.str();
    }
  }
}

TEST(OrbitOf, Examples) {
  const Orbit big = orbit_of(P("863247159"));
  EXPECT_EQ(big.size(), 64u);
  EXPECT_EQ(big.peak_count, 1);

  std::vector<std::string> members;
  for (const auto& u : orbit_of(P("123")).members) members.push_back(u.str());
  EXPECT_EQ(members, (std::vector<std::string>{"123", "213", "312", "321"}));

  for (int n = 1; n <= 8; ++n) EXPECT_EQ(orbit_of(Permutation::identity(n)).size(), std::uint64_t{1} << (n - 1));

  const Orbit single = orbit_of(P("132"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.representative.str(), "132");
}

TEST(OrbitOf, RepresentativeIsLeastMember) {
  const Orbit o = orbit_of(P("863247159"));
  EXPECT_EQ(o.representative, o.members.front());
  EXPECT_TRUE(std::is_sorted(o.members.begin(), o.members.end()));
  EXPECT_EQ(orbit_of(o.members.back()).members, o.members);
}

TEST(OrbitOf, ClassificationIsInvariantExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> seen;
    for (const auto& w : enumerate_sn(n)) {
      if (seen.contains(w)) continue;
      const Orbit o = orbit_of(w);
      seen.insert(o.members.begin(), o.members.end());
      for (const auto& u : o.members) {
        const LetterClass c = classify_letters(u);
        ASSERT_EQ(sorted(c.peaks(u)), o.peak_values) << u.str();
        ASSERT_EQ(sorted(c.valleys(u)), o.valley_values) << u.str();
        ASSERT_EQ(sorted(c.free_letters(u)), o.free_values) << u.str();
      }
    }
    EXPECT_EQ(seen.size(), factorial_u64(n));
  }
}

TEST(OrbitPolynomials, GoldenOrbit) {
  const Orbit o = orbit_of(P("863247159"));
  EXPECT_EQ(orbit_descent_polynomial(o), UniPoly::one_plus_t_pow(6).shifted(2));
  const BiPoly one = BiPoly::monomial(1, 0, 0);
  const BiPoly expected = BiPoly::monomial(1, 3, 2) * (one + BiPoly::monomial(1, 0, 1)).pow(2) *
                          (one + BiPoly::monomial(1, 1, 1)).pow(4);
  EXPECT_EQ(orbit_two_sided_polynomial(o), expected);
}

TEST(OrbitPolynomials, IdentityOrbit) {
  for (int n = 1; n <= 8; ++n) {
    const BiPoly one = BiPoly::monomial(1, 0, 0);
    const BiPoly expected = BiPoly::monomial(1, 1, 1) * (one + BiPoly::monomial(1, 1, 1)).pow(static_cast<unsigned>(n - 1));
    EXPECT_EQ(orbit_two_sided_polynomial(orbit_of(Permutation::identity(n))), expected) << n;
  }
}

TEST(OrbitPolynomials, SumOverOrbitsGivesEulerianPolynomials) {
  const EulerianTable table = table_from_recurrence(9);
  const auto squares = two_sided_from_recurrence(9);
  for (int n = 1; n <= 9; ++n) {
    std::vector<bool> seen(factorial_u64(n), false);
    UniPoly uni;
    BiPoly bi;
    PermutationStream stream(n);
    std::uint64_t rank = 0;
    while (stream.next()) {
      if (!seen[rank++]) {
        const Orbit o = orbit_of(stream.current_permutation());
        for (const auto& u : o.members) seen[lex_rank(u)] = true;
        uni += orbit_descent_polynomial(o);
        bi += orbit_two_sided_polynomial(o);
      }
    }
    EXPECT_EQ(uni, eulerian_polynomial(table.row(n))) << n;
    EXPECT_EQ(bi, two_sided_polynomial(squares[static_cast<std::size_t>(n - 1)])) << n;
  }
}

TEST(OrbitCensus, Examples) {
  EXPECT_EQ(orbit_census(3), (std::map<int, Count>{{0, 1}, {1, 2}}));
  EXPECT_EQ(orbit_census(5), (std::map<int, Count>{{0, 1}, {1, 22}, {2, 16}}));
  EXPECT_EQ(orbit_census(1), (std::map<int, Count>{{0, 1}}));
  EXPECT_THROW(orbit_census(12), GuardRailError);
}

TEST(OrbitCensus, EqualsGammaVectors) {
  const EulerianTable table = table_from_recurrence(9);
  for (int n = 1; n <= 9; ++n) {
    const auto census = orbit_census(n);
    const GammaVector g = gamma_extract(eulerian_polynomial(table.row(n)), n);
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
      const auto it = census.find(static_cast<int>(i));
      EXPECT_EQ(it == census.end() ? Count(0) : it->second, g.gammas[i]) << "n=" << n << " peaks=" << i;
    }
    EXPECT_LE(census.size(), g.gammas.size());
  }
}

}  // namespace
}  // namespace ewb
