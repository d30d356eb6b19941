#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "circum/bounds.hpp"

using namespace circum;

namespace {

const NamedConstant& find(const std::vector<NamedConstant>& cs, const std::string& name) {
  for (const NamedConstant& c : cs)
    if (c.name == name) return c;
  throw std::runtime_error("missing constant " + name);
}

}  // namespace

TEST(Bounds, Constants) {
  const BoundConstants& k = constants();
  EXPECT_NEAR(k.c, 1.0 / (std::pow(8.0, 0.8) - std::pow(6.0, 0.8)), 1e-15);
  EXPECT_NEAR(k.c, 0.922, 0.0005);
  EXPECT_TRUE(matches_printed(k.alpha, 1.983));
  EXPECT_NEAR(k.d, std::pow(k.c, 5.0), 1e-12);
}

TEST(Bounds, PrintedPrecision) {
  EXPECT_DOUBLE_EQ(last_digit_unit(0.0018), 1e-4);
  EXPECT_DOUBLE_EQ(last_digit_unit(21.275), 1e-3);
  EXPECT_DOUBLE_EQ(last_digit_unit(2.918e-5), 1e-8);
  EXPECT_DOUBLE_EQ(last_digit_unit(4), 1);
  EXPECT_TRUE(matches_printed(0.00184, 0.0018));
  EXPECT_TRUE(matches_printed(0.9225, 0.922));
  EXPECT_FALSE(matches_printed(0.0020, 0.0018));
  EXPECT_FALSE(matches_printed(0.95, 0.922));
}

TEST(Bounds, BoundValues) {
  EXPECT_DOUBLE_EQ(bound(BoundKind::Adjacent, 0), 0);
  EXPECT_NEAR(bound(BoundKind::Adjacent, 32), 16, 1e-12);
  EXPECT_NEAR(bound(BoundKind::Nonadjacent, 32), 16 * constants().c, 1e-12);
  EXPECT_TRUE(meets(3, 3 + 1e-10));
  EXPECT_FALSE(meets(3, 3.001));
}

TEST(Bounds, PrintedConstantsWithinOnePercent) {
  auto cs = proof_constants_report();
  int printed = 0;
  for (const NamedConstant& c : cs) {
    if (c.printed == 0) continue;
    ++printed;
    EXPECT_TRUE(matches_printed(c.value, c.printed)) << c.name << " " << c.value;
  }
  EXPECT_GE(printed, 16);
  EXPECT_NEAR(find(cs, "case2_threshold").value, 21.275, 0.2);
}

TEST(Bounds, OptimalExponent) {
  auto t0 = std::chrono::steady_clock::now();
  RootResult r = optimal_exponent(1e-15);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_GT(r.root, 0.800008);
  EXPECT_LT(r.root, 0.9);
  EXPECT_LT(std::abs(r.residual), 1e-12);
  EXPECT_LT(secs, 1.0);
  const double f = std::pow(8.956, r.root) + std::pow(1.036, r.root) - std::pow(10.992, r.root);
  EXPECT_LT(std::abs(f), 1e-12);
}

TEST(Lemma4, TightPointsGiveThePrintedMargins) {
  struct Point {
    Lemma4Part part;
    std::vector<double> v;
    double margin;
  };
  const std::vector<Point> points{
      {Lemma4Part::I, {8.956, 1.036, 1}, 2.918e-5},
      {Lemma4Part::III, {8.884, 1}, 0.0018},
      {Lemma4Part::IV, {2.072, 1.036, 1, 1, 5.884}, 0.0275},
      {Lemma4Part::V, {1, 1, 1, 1}, 0.128},
  };
  for (const Point& p : points) {
    EXPECT_TRUE(lemma4_hypothesis(p.part, p.v)) << to_string(p.part);
    EXPECT_TRUE(matches_printed(lemma4_margin(p.part, p.v), p.margin)) << to_string(p.part);
    EXPECT_EQ(check_lemma4(p.part, p.v), Lemma4Outcome::Holds);
  }
  EXPECT_EQ(check_lemma4(Lemma4Part::I, std::vector<double>{1, 1, 1}), Lemma4Outcome::HypothesisFailed);
  EXPECT_EQ(arity(Lemma4Part::IV), 5);
}

TEST(Lemma4, GridSmall) {
  for (int p = 1; p <= 6; ++p) {
    GridSummary s = grid_check(static_cast<Lemma4Part>(p), 12, 20000, 3);
    EXPECT_EQ(s.failures, 0) << to_string(s.part);
    EXPECT_GT(s.checked, 0) << to_string(s.part);
  }
}
