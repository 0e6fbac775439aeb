#include <gtest/gtest.h>

#include "oracles.h"
#include "petruska/error.h"
#include "petruska/geometry/lp.h"
#include "petruska/geometry/rational.h"

namespace {

using namespace petruska;
using geom::LinearConstraint;
using geom::LpStatus;
using geom::Rat;

TEST(Rational, CanonicalAfterArithmetic) {
  Rat a = geom::make_rat(6, -4);
  EXPECT_EQ(geom::numerator_string(a), "-3");
  EXPECT_EQ(geom::denominator_string(a), "2");
  Rat b = a + geom::make_rat(3, 2);
  EXPECT_EQ(geom::to_string(b), "0");
  EXPECT_EQ(geom::denominator_string(b), "1");
}

TEST(Rational, ParsesAndRejects) {
  EXPECT_EQ(geom::parse_rat("10", "-4"), geom::make_rat(-5, 2));
  EXPECT_EQ(geom::parse_rat("-7/21"), geom::make_rat(-1, 3));
  EXPECT_EQ(geom::parse_rat("123456789012345678901234567890", "1") * 0, 0);
  EXPECT_THROW(geom::parse_rat("1", "0"), Error);
  EXPECT_THROW(geom::parse_rat("1.5", "2"), Error);
  EXPECT_THROW(geom::parse_rat("", "1"), Error);
  EXPECT_THROW(geom::parse_rat("x/2"), Error);
}

TEST(Rational, RoundToDenominator) {
  EXPECT_EQ(geom::round_to_denominator(0.5, 10), geom::make_rat(1, 2));
  EXPECT_EQ(geom::round_to_denominator(-0.25, 2), geom::make_rat(-1, 2));
  EXPECT_EQ(geom::round_to_denominator(1.0 / 3, 1000000), geom::make_rat(333333, 1000000));
}

TEST(Lp, BoxMaximum) {
  // x <= 1, -x <= 0, y <= 1, -y <= 0; maximize x + y.
  std::vector<LinearConstraint> c = {
      {{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  std::vector<Rat> obj = {1, 1};
  auto s = geom::solve_lp(c, 2, obj);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 2);
  EXPECT_EQ(s.point[0], 1);
  EXPECT_EQ(s.point[1], 1);
}

TEST(Lp, Infeasible) {
  std::vector<LinearConstraint> c = {{{1, 0}, 0}, {{-1, 0}, -1}};
  EXPECT_EQ(geom::solve_lp(c, 2).status, LpStatus::kInfeasible);
}

TEST(Lp, Unbounded) {
  std::vector<LinearConstraint> c = {{{0, 1}, 0}, {{0, -1}, 0}};
  std::vector<Rat> obj = {1, 0};
  auto s = geom::solve_lp(c, 2, obj);
  EXPECT_EQ(s.status, LpStatus::kUnbounded);
  ASSERT_EQ(s.point.size(), 2u);
  EXPECT_EQ(s.point[1], 0);
}

TEST(Lp, DegenerateVertexDoesNotCycle) {
  // Many constraints through the origin; Bland's rule must terminate.
  std::vector<LinearConstraint> c;
  for (int i = 1; i <= 12; ++i) c.push_back({{Rat(i), Rat(-(13 - i))}, 0});
  c.push_back({{1, 1}, 0});
  std::vector<Rat> obj = {1, 1};
  auto s = geom::solve_lp(c, 2, obj);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 0);
}

TEST(Lp, ThreeVariables) {
  // maximize t subject to t <= x, t <= 1 - x, 0 <= x <= 1.
  std::vector<LinearConstraint> c = {
      {{-1, 0, 1}, 0}, {{1, 0, 1}, 1}, {{-1, 0, 0}, 0}, {{1, 0, 0}, 1}, {{0, 1, 0}, 0},
      {{0, -1, 0}, 0}};
  std::vector<Rat> obj = {0, 0, 1};
  auto s = geom::solve_lp(c, 3, obj);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, geom::make_rat(1, 2));
  EXPECT_EQ(s.point[0], geom::make_rat(1, 2));
}

// Oracle: a bounded 2-variable LP attains its optimum at a vertex, the
// intersection of two constraint lines.
TEST(LpProperty, MatchesVertexEnumeration) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<int> coef(-6, 6), count(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<LinearConstraint> c = {
        {{1, 0}, 20}, {{-1, 0}, 20}, {{0, 1}, 20}, {{0, -1}, 20}};
    for (int i = 0, m = count(rng); i < m; ++i) {
      Rat a = coef(rng), b = coef(rng);
      if (a == 0 && b == 0) a = 1;
      c.push_back({{a, b}, geom::make_rat(coef(rng) * 3, 1 + (trial % 4))});
    }
    std::vector<Rat> obj = {coef(rng), coef(rng)};
    std::optional<Rat> best;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const Rat det = c[i].coeffs[0] * c[j].coeffs[1] - c[i].coeffs[1] * c[j].coeffs[0];
        if (det == 0) continue;
        const Rat x = (c[i].rhs * c[j].coeffs[1] - c[i].coeffs[1] * c[j].rhs) / det;
        const Rat y = (c[i].coeffs[0] * c[j].rhs - c[i].rhs * c[j].coeffs[0]) / det;
        bool ok = true;
        for (const auto& h : c) ok = ok && h.coeffs[0] * x + h.coeffs[1] * y <= h.rhs;
        if (!ok) continue;
        const Rat v = obj[0] * x + obj[1] * y;
        if (!best || v > *best) best = v;
      }
    auto s = geom::solve_lp(c, 2, obj);
    if (!best) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_EQ(s.value, *best) << "trial " << trial;
    for (const auto& h : c) EXPECT_LE(h.coeffs[0] * s.point[0] + h.coeffs[1] * s.point[1], h.rhs);
  }
}

}  // namespace
