#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wpl/wpl.hpp"

using namespace wpl;

namespace {

LElement el(const WeightTriple& w, Int a1, Int a2, Int a3, Int a) {
  return LElement::normalize(w, a1, a2, a3, a);
}

}  // namespace

TEST(WeightTriple, RejectsWeightsBelowTwo) {
  EXPECT_THROW(WeightTriple(1, 2, 3), std::invalid_argument);
  EXPECT_THROW(WeightTriple(2, 0, 3), std::invalid_argument);
  EXPECT_NO_THROW(WeightTriple(2, 2, 2));
}

TEST(WeightTriple, DerivedQuantities) {
  const WeightTriple w(2, 3, 7);
  EXPECT_EQ(w.lcm(), 42);
  EXPECT_EQ(w.product(), 42);
  EXPECT_EQ(w.interior_count(), 12);
  EXPECT_EQ(WeightTriple(2, 4, 6).lcm(), 12);
  EXPECT_EQ(w.to_string(), "(2,3,7)");
}

TEST(LElement, NormalizationCarriesIntoC) {
  const WeightTriple w(2, 3, 7);
  const LElement a = el(w, 5, -1, 7, 0);
  EXPECT_EQ(a.coord(0), 1);
  EXPECT_EQ(a.coord(1), 2);
  EXPECT_EQ(a.coord(2), 0);
  EXPECT_EQ(a.c_part(), 2 - 1 + 1);
}

TEST(LElement, CanonicalElementNormalForms) {
  EXPECT_EQ(omega(WeightTriple(2, 2, 2)), el(WeightTriple(2, 2, 2), 1, 1, 1, -2));
  const WeightTriple w(2, 3, 7);
  const LElement om = omega(w);
  EXPECT_EQ(om.coords(), (std::array<Int, 3>{1, 2, 6}));
  EXPECT_EQ(om.c_part(), -2);
  EXPECT_EQ(delta(om), 1);
  EXPECT_EQ(delta(omega(WeightTriple(2, 2, 2))), -1);
}

TEST(LElement, XbarDegrees) {
  const WeightTriple w(2, 3, 7);
  EXPECT_EQ(xbar(w, 0), el(w, 0, 2, 6, -1));
  EXPECT_EQ(xbar(w, 1), el(w, 1, 0, 6, -1));
  EXPECT_EQ(delta(xbar(w, 0)), 22);
  EXPECT_EQ(delta(xbar(w, 1)), 15);
  EXPECT_EQ(delta(xbar(w, 2)), 7);
}

TEST(LElement, MixedWeightsThrow) {
  const LElement a = LElement::generator(WeightTriple(2, 3, 7), 0);
  const LElement b = LElement::generator(WeightTriple(2, 3, 5), 0);
  EXPECT_THROW((void)(a + b), weight_mismatch);
  EXPECT_THROW((void)(a - b), weight_mismatch);
}

TEST(LElement, PartialOrder) {
  const WeightTriple w(2, 3, 7);
  const LElement c = LElement::canonical(w);
  EXPECT_TRUE(is_nonneg(c));
  EXPECT_TRUE(is_nonneg(LElement::generator(w, 2)));
  EXPECT_FALSE(is_nonneg(omega(w)));
  EXPECT_TRUE(leq(LElement::zero(w), c));
  EXPECT_FALSE(leq(c, LElement::zero(w)));
}

TEST(Classify, KnownTypes) {
  for (auto [a, b, c] : std::vector<std::array<Int, 3>>{
           {2, 2, 2}, {2, 2, 9}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
    EXPECT_EQ(classify(WeightTriple(a, b, c)), WeightClass::domestic);
  }
  for (auto [a, b, c] : std::vector<std::array<Int, 3>>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}}) {
    EXPECT_EQ(classify(WeightTriple(a, b, c)), WeightClass::tubular);
  }
  for (auto [a, b, c] : std::vector<std::array<Int, 3>>{{2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {4, 4, 4}}) {
    EXPECT_EQ(classify(WeightTriple(a, b, c)), WeightClass::wild);
  }
}

TEST(Classify, SignOfCanonicalDegreeOverAllSmallTriples) {
  for (const auto& w : oracle::triples_up_to(9)) {
    const double s = 1.0 / w[0] + 1.0 / w[1] + 1.0 / w[2];
    const WeightClass expected = s > 1.0 + 1e-12   ? WeightClass::domestic
                                 : s < 1.0 - 1e-12 ? WeightClass::wild
                                                   : WeightClass::tubular;
    EXPECT_EQ(classify(w), expected) << w.to_string();
  }
}

TEST(InZOmega, Examples) {
  const WeightTriple w(2, 3, 7);
  EXPECT_EQ(in_z_omega(LElement::generator(w, 0)), 21);
  EXPECT_EQ(in_z_omega(omega(w)), 1);
  EXPECT_EQ(in_z_omega(LElement::zero(w)), 0);
  const WeightTriple v(2, 4, 6);
  EXPECT_EQ(in_z_omega(LElement::generator(v, 0)), std::nullopt);
  EXPECT_EQ(in_z_omega(-3 * omega(v)), -3);
  EXPECT_THROW(in_z_omega(LElement::zero(WeightTriple(2, 4, 4))), tubular_weight_error);
}

TEST(ElementSyntax, ParseAndPrint) {
  const WeightTriple w(2, 3, 7);
  EXPECT_EQ(to_string(parse_element(w, "x1+2x2+6x3-2c")), "x1+2x2+6x3-2c");
  EXPECT_EQ(parse_element(w, "w"), omega(w));
  EXPECT_EQ(parse_element(w, "2*x2 - c + 3x3"), el(w, 0, 2, 3, -1));
  EXPECT_EQ(parse_element(w, "(3,0,0,0)"), el(w, 1, 0, 0, 1));
  EXPECT_EQ(parse_element(w, "0"), LElement::zero(w));
  EXPECT_EQ(parse_element(w, "-x1"), el(w, 1, 0, 0, -1));
  EXPECT_EQ(to_string(LElement::zero(w)), "0");
  EXPECT_EQ(to_quadruple(omega(w)), "(1,2,6,-2)");
}

TEST(ElementSyntax, RejectsMalformedInput) {
  const WeightTriple w(2, 3, 7);
  for (const char* bad : {"", "x4", "x1+", "2", "(1,2,3)", "y", "x1 x2", "c+"}) {
    EXPECT_THROW(parse_element(w, bad), parse_error) << bad;
  }
  EXPECT_THROW(parse_weights("2,3"), parse_error);
  EXPECT_THROW(parse_weights("2,a,3"), parse_error);
  EXPECT_THROW(parse_weights("2,1,3"), std::invalid_argument);
  EXPECT_EQ(parse_weights("2,3,7"), WeightTriple(2, 3, 7));
}

// Group laws, degree homomorphism and normal-form invariants on random data.
TEST(LElementProperty, GroupLawsAndDegree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    const WeightTriple w = oracle::random_triple(rng);
    const LElement a = oracle::random_element(w, rng);
    const LElement b = oracle::random_element(w, rng);
    const LElement c = oracle::random_element(w, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a + LElement::zero(w), a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(-(-a), a);
    ASSERT_EQ(delta(a + b), delta(a) + delta(b));
    ASSERT_EQ(delta(3 * a), 3 * delta(a));
    ASSERT_EQ(leq(a, b), leq(a + c, b + c));
  }
}

TEST(LElementProperty, NormalizationMatchesCarryOracle) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Int> d(-50, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const WeightTriple w = oracle::random_triple(rng);
    const Int a[4] = {d(rng), d(rng), d(rng), d(rng)};
    const LElement x = LElement::normalize(w, a[0], a[1], a[2], a[3]);
    const Int p = w.lcm();
    Int raw_degree = a[3] * p;
    for (int i = 0; i < 3; ++i) {
      ASSERT_GE(x.coord(i), 0);
      ASSERT_LT(x.coord(i), w[i]);
      ASSERT_EQ(oracle::mod(a[i] - x.coord(i), w[i]), 0);
      raw_degree += a[i] * (p / w[i]);
    }
    ASSERT_EQ(delta(x), raw_degree);
    ASSERT_EQ(LElement::normalize(w, x.coord(0), x.coord(1), x.coord(2), x.c_part()), x);
  }
}

TEST(LElementProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightTriple w = oracle::random_triple(rng);
    const LElement a = oracle::random_element(w, rng);
    ASSERT_EQ(parse_element(w, to_string(a)), a) << to_string(a);
    ASSERT_EQ(parse_element(w, to_quadruple(a)), a);
  }
}

TEST(LElementProperty, InZOmegaMatchesMultiples) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Int> k(-40, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightTriple w = oracle::random_triple(rng);
    if (classify(w) == WeightClass::tubular) continue;
    const Int r = k(rng);
    const auto got = in_z_omega(r * omega(w));
    ASSERT_TRUE(got.has_value());
    ASSERT_EQ(*got * omega(w), r * omega(w));
  }
}
