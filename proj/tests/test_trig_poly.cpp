#include <gtest/gtest.h>

#include "support.hpp"

using namespace chenchern;

namespace {

FramePtr x_and_t() {
  return make_frame({{"x", VarKind::Periodic, true}, {"t", VarKind::Interval, true}});
}

}  // namespace

TEST(TrigPoly, AntiderivativeOfOne) {
  auto f = x_and_t();
  EXPECT_EQ(antiderivative(TrigPoly::constant(f, Scalar(1)), 1), TrigPoly::monomial_power(f, 1, 1));
}

TEST(TrigPoly, AntiderivativeOfT) {
  auto f = x_and_t();
  EXPECT_EQ(antiderivative(TrigPoly::monomial_power(f, 1, 1), 1),
            TrigPoly::monomial_power(f, 1, 2) * Scalar(frac(1, 2)));
}

TEST(TrigPoly, AntiderivativeOfExponential) {
  auto f = x_and_t();
  for (int m : {-3, -1, 2}) {
    TrigPoly e = TrigPoly::exp_i(f, 1, Rational(m));
    Scalar inv = (Scalar::i() * Scalar::tau() * Scalar(static_cast<long>(m))).inverse();
    TrigPoly expected = (e - TrigPoly::constant(f, Scalar(1))) * inv;
    EXPECT_EQ(antiderivative(e, 1), expected);
  }
}

TEST(TrigPoly, AntiderivativeRejectsPeriodic) {
  auto f = x_and_t();
  EXPECT_THROW(antiderivative(TrigPoly::exp_i(f, 0, Rational(1)), 0), AlgebraError);
}

TEST(TrigPoly, FourierIntegral) {
  auto f = x_and_t();
  EXPECT_TRUE(fourier_integral(TrigPoly::exp_i(f, 0, Rational(2)), 0).is_zero());
  TrigPoly c = TrigPoly::constant(f, Scalar(frac(5, 3)));
  EXPECT_EQ(fourier_integral(c, 0), c);
  TrigPoly p = TrigPoly::constant(f, Scalar(3)) + TrigPoly::exp_i(f, 0, Rational(1));
  EXPECT_EQ(fourier_integral(p, 0), TrigPoly::constant(f, Scalar(3)));
}

TEST(TrigPoly, UnitIntegralOfQuarterFrequency) {
  auto f = x_and_t();
  // int_0^1 e^{i tau t/4} dt = (i - 1)/(i tau/4) = (4/tau)(1 + i)
  TrigPoly got = integrate_unit(TrigPoly::exp_i(f, 1, frac(1, 4)), 1);
  EXPECT_EQ(got, TrigPoly::constant(f, Scalar(Rational(4), Rational(4), -1)));
}

TEST(TrigPoly, SubstituteShiftsFrequencyAndPhase) {
  auto f = make_frame({{"y", VarKind::Periodic, true}, {"x", VarKind::Periodic, true}});
  // e^{i tau y} with y = 2x + 1/4 gives i e^{2 i tau x}
  TrigPoly got = substitute(TrigPoly::exp_i(f, 0, Rational(1)), 0, AffineSub{{0, 2}, frac(1, 4)});
  EXPECT_EQ(got, TrigPoly::exp_i(f, 1, Rational(2)) * Scalar::i());
}

/// d/dt of the antiderivative gives back the polynomial exactly.
TEST(TrigPolyProperty, AntiderivativeInvertsDerivative) {
  std::mt19937_64 rng(21);
  auto f = make_frame({{"x", VarKind::Periodic, true},
                       {"t", VarKind::Interval, true},
                       {"s", VarKind::Interval, false}});
  for (int trial = 0; trial < 300; ++trial) {
    TrigPoly p = fixtures::random_poly(rng, f, 4);
    for (int v : {1, 2}) {
      TrigPoly q = antiderivative(p, v);
      ASSERT_EQ(derivative(q, v), p) << to_string(p);
      ASSERT_TRUE(substitute_constant(q, v, Rational(0)).is_zero());
    }
  }
}

/// Products stay in the class and distribute over sums.
TEST(TrigPolyProperty, ProductClosure) {
  std::mt19937_64 rng(22);
  auto f = x_and_t();
  for (int trial = 0; trial < 200; ++trial) {
    TrigPoly a = fixtures::random_poly(rng, f);
    TrigPoly b = fixtures::random_poly(rng, f);
    TrigPoly c = fixtures::random_poly(rng, f);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(derivative(a * b, 1), derivative(a, 1) * b + a * derivative(b, 1));
  }
}
