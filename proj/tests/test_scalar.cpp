#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace chenchern;

TEST(Scalar, ITauSquaredIsMinusTauSquared) {
  Scalar it = Scalar::i() * Scalar::tau();
  EXPECT_EQ(it * it, -Scalar::tau(2));
}

TEST(Scalar, AdditiveIdentity) {
  Scalar a(frac(3, 7), frac(-1, 2), 2);
  EXPECT_EQ(a + Scalar(), a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE((a - a).terms().empty());
}

TEST(Scalar, Conjugation) {
  Scalar x = Scalar::tau() * Scalar(Rational(1), Rational(1));
  EXPECT_EQ(conj(x), Scalar::tau() * Scalar(Rational(1), Rational(-1)));
}

TEST(Scalar, NumericEvalOfTau) {
  EXPECT_NEAR(numeric_eval(Scalar::tau()).real(), 2 * std::numbers::pi, 1e-15);
  auto it = numeric_eval(Scalar::i() * Scalar::tau());
  EXPECT_NEAR(it.imag(), 2 * std::numbers::pi, 1e-15);
  EXPECT_EQ(it.real(), 0.0);
  EXPECT_EQ(numeric_eval(Scalar()), std::complex<double>(0.0, 0.0));
}

TEST(Scalar, QuarterPhases) {
  EXPECT_EQ(Scalar::unit_phase(frac(1, 4)), Scalar::i());
  EXPECT_EQ(Scalar::unit_phase(frac(-1, 4)), -Scalar::i());
  EXPECT_EQ(Scalar::unit_phase(frac(1, 2)), Scalar(-1));
  EXPECT_EQ(Scalar::unit_phase(Rational(7)), Scalar(1));
  EXPECT_THROW(Scalar::unit_phase(frac(1, 3)), AlgebraError);
}

TEST(Scalar, InverseOnlyForSingleTerms) {
  Scalar a(frac(3, 5), frac(4, 5), -1);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW((Scalar(1) + Scalar::tau()).inverse(), AlgebraError);
}

/// Ring axioms hold as exact equality of canonical representations.
TEST(ScalarProperty, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Scalar a = fixtures::random_scalar(rng);
    Scalar b = fixtures::random_scalar(rng);
    Scalar c = fixtures::random_scalar(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(conj(a * b), conj(a) * conj(b));
  }
}

/// numeric_eval is multiplicative to 1e-12, relative to the coefficient mass
/// of the factors, on products of up to eight factors.
TEST(ScalarProperty, NumericEvalIsHomomorphism) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar prod(1);
    std::complex<double> expected = 1.0;
    double mass = 1.0;
    int factors = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < factors; ++k) {
      Scalar f = fixtures::random_nonzero_scalar(rng);
      prod *= f;
      expected *= numeric_eval(f);
      double m = 0.0;
      for (const auto& [pw, c] : f.terms()) m += std::abs(numeric_eval(Scalar(c.re, c.im, pw)));
      mass *= m;
    }
    std::complex<double> got = numeric_eval(prod);
    ASSERT_LE(std::abs(got - expected), 1e-12 * mass) << to_string(prod);
  }
}
