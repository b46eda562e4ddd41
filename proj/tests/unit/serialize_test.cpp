#include <gtest/gtest.h>

#include "cli/report.hpp"
#include "ewb/serialize.hpp"
#include "support/oracles.hpp"

namespace ewb {
namespace {

BiPoly st(int coeff, int s, int t) { return BiPoly::monomial(coeff, s, t); }

TEST(PolynomialJson, Shape) {
  const Json u = to_json(eulerian_polynomial(4));
  EXPECT_EQ(u.dump(), R"({"terms":[[1,"1"],[2,"11"],[3,"11"],[4,"1"]],"var":"t"})");
  const Json b = to_json(st(1, 2, 3) + st(-4, 0, 1));
  EXPECT_EQ(b.dump(), R"({"terms":[[0,1,"-4"],[2,3,"1"]],"var":"st"})");
  EXPECT_EQ(to_json(UniPoly()).at("terms").size(), 0u);
}

TEST(PolynomialJson, RoundTripRandom) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const UniPoly u = testing::random_uni(rng, 12, 1000);
    ASSERT_EQ(uni_poly_from_json(Json::parse(to_json(u).dump())), u);
    const BiPoly b = testing::random_bi(rng, 8, 1000, 20);
    ASSERT_EQ(bi_poly_from_json(Json::parse(to_json(b).dump())), b);
  }
}

TEST(PolynomialJson, LargeCoefficientsSurvive) {
  const UniPoly big = eulerian_polynomial(40);
  EXPECT_EQ(uni_poly_from_json(to_json(big)), big);
}

TEST(PolynomialJson, RejectsMalformed) {
  EXPECT_ANY_THROW(uni_poly_from_json(Json::parse(R"({"var":"st","terms":[]})")));
  EXPECT_ANY_THROW(uni_poly_from_json(Json::parse(R"({"var":"t","terms":[[1,"x"]]})")));
  EXPECT_ANY_THROW(bi_poly_from_json(Json::parse(R"({"var":"st","terms":[[1,"2"]]})")));
}

TEST(EulerianRowJson, RoundTrip) {
  const std::vector<Count> row{1, 4, 1};
  const Json j = eulerian_row_json(3, row, gamma_extract(eulerian_polynomial(row), 3));
  EXPECT_EQ(j.dump(), R"({"A":["1","4","1"],"des":[0,1,2],"gamma":["1","2"],"i":[1,2,3],"n":3})");
  EXPECT_EQ(eulerian_row_from_json(j), row);
  EXPECT_FALSE(eulerian_row_json(3, row, std::nullopt).contains("gamma"));
}

TEST(TwoSidedJson, RoundTrip) {
  const auto tables = two_sided_from_recurrence(9);
  for (const auto& t : tables) {
    const Json j = two_sided_json(t, std::nullopt);
    EXPECT_EQ(two_sided_from_json(Json::parse(j.dump())), t);
  }
  const Json with = two_sided_json(tables[3], gessel_solve(two_sided_polynomial(tables[3]), 4));
  EXPECT_EQ(with.at("gamma").at("(2,0)"), "7");
  EXPECT_EQ(with.at("gessel_nonnegative"), true);
}

TEST(Formatting, Univariate) {
  EXPECT_EQ(format_uni(eulerian_polynomial(4)), "t + 11t^2 + 11t^3 + t^4");
  EXPECT_EQ(format_uni(UniPoly()), "0");
  EXPECT_EQ(format_uni(UniPoly(std::vector<Count>{3, 0, -2})), "3 - 2t^2");
  EXPECT_EQ(format_orbit_shape(2, 6), "t^2(1+t)^6");
  EXPECT_EQ(format_orbit_shape(1, 0), "t");
  EXPECT_EQ(format_orbit_shape(1, 1), "t(1+t)");
}

TEST(Formatting, Bivariate) {
  EXPECT_EQ(format_bi(st(1, 1, 1) + st(10, 2, 2) + st(1, 2, 3)), "s t + 10 s^2 t^2 + s^2 t^3");
  EXPECT_EQ(format_bi(BiPoly()), "0");
}

TEST(Formatting, FactoredBivariate) {
  const BiPoly one = st(1, 0, 0);
  const BiPoly p = st(1, 3, 2) * (one + st(1, 0, 1)).pow(2) * (one + st(1, 1, 1)).pow(4);
  EXPECT_EQ(format_bi_factored(p), "s^3 t^2 (1+t)^2 (1+st)^4");
  EXPECT_EQ(format_bi_factored(st(1, 1, 1) * (one + st(1, 1, 1)).pow(3)), "s t (1+st)^3");
  EXPECT_EQ(format_bi_factored(st(1, 1, 0) * (st(1, 1, 0) + st(1, 0, 1))), "s (s+t)");
  // Irreducible cofactors are printed expanded.
  EXPECT_EQ(format_bi_factored(st(1, 1, 1) * (one + st(1, 2, 1))), "s t [1 + s^2 t]");
}

TEST(OrbitJson, Fields) {
  const Permutation w = Permutation::parse("863247159");
  const Json j = orbit_json(w, orbit_of(w));
  EXPECT_EQ(j.at("permutation"), "863247159");
  EXPECT_EQ(j.at("representative"), "234671589");
  EXPECT_EQ(j.at("size"), 64);
  EXPECT_EQ(j.at("uni"), "t^2(1+t)^6");
  EXPECT_EQ(j.at("bi"), "s^3 t^2 (1+t)^2 (1+st)^4");
  EXPECT_EQ(j.at("valleys"), Json::parse(R"(["2","1"])"));
  EXPECT_EQ(uni_poly_from_json(j.at("uni_terms")), orbit_descent_polynomial(orbit_of(w)));
  EXPECT_EQ(bi_poly_from_json(j.at("bi_terms")), orbit_two_sided_polynomial(orbit_of(w)));
}

TEST(ReportJson, RoundTrip) {
  cli::VerificationReport r{"demo", {}, {}};
  r.add("first", true);
  r.add("second", false, "expected 3, got 4");
  const Json j = cli::report_json(r);
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("exit_status"), 1);
  EXPECT_FALSE(j.contains("elapsed"));
  const cli::VerificationReport back = cli::report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.suite, "demo");
  EXPECT_EQ(back.checks, r.checks);
  EXPECT_EQ(back.exit_status(), 1);

  cli::VerificationReport outer{"all", {}, {}};
  outer.absorb(r);
  EXPECT_EQ(outer.checks[0].description, "[demo] first");
  EXPECT_FALSE(outer.pass());
}

TEST(ReportText, Lines) {
  cli::VerificationReport r{"demo", {}, {}};
  r.add("ok", true);
  r.add("bad", false, "why");
  const std::string text = cli::report_text(r);
  EXPECT_NE(text.find("PASS  ok"), std::string::npos);
  EXPECT_NE(text.find("FAIL  bad: why"), std::string::npos);
  EXPECT_NE(text.find("suite demo: 1/2 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace ewb
