#include <gtest/gtest.h>

#include "support.hpp"

using namespace chenchern;

TEST(Form, DxWedgeDxVanishes) {
  auto f = Frame::torus(2);
  EXPECT_TRUE(wedge(Form::dx(f, 0), Form::dx(f, 0)).is_zero());
}

TEST(Form, ThetaSquaredVanishes) {
  auto f = Frame::torus(2);
  Form a = wedge(Form::theta(f), Form::dx(f, 0));
  Form b = wedge(Form::theta(f), Form::dx(f, 1));
  EXPECT_TRUE(wedge(a, b).is_zero());
}

TEST(Form, GradedAntisymmetry) {
  auto f = Frame::torus(2);
  EXPECT_EQ(wedge(Form::dx(f, 0), Form::dx(f, 1)), -wedge(Form::dx(f, 1), Form::dx(f, 0)));
}

TEST(Form, WedgeMatchesAlphaBetaRule) {
  std::mt19937_64 rng(31);
  auto f = Frame::torus(3);
  for (int trial = 0; trial < 100; ++trial) {
    int j1 = static_cast<int>(rng() % 3);
    Form w1 = fixtures::random_form(rng, f, j1);
    Form w2 = fixtures::random_form(rng, f, static_cast<int>(rng() % 3));
    Form a1 = alpha_part(w1), b1 = beta_part(w1), a2 = alpha_part(w2), b2 = beta_part(w2);
    Form sign_a1 = (j1 % 2) ? -a1 : a1;
    Form expected = make_tt(wedge(a1, a2), wedge(b1, a2) + wedge(sign_a1, b2));
    ASSERT_EQ(wedge(w1, w2), expected);
  }
}

TEST(Form, DTOfOneAndOfThetaBeta) {
  auto f = Frame::torus(2);
  EXPECT_TRUE(d_T(Form::constant(f, Scalar(1))).is_zero());
  Form beta = TrigPoly::exp_i(f, 0, Rational(1)) * Form::dx(f, 1);
  EXPECT_EQ(d_T(make_tt(Form(f), beta)), make_tt(beta, -exterior_d(beta)));
}

TEST(Form, PullbackExamples) {
  auto y = make_frame({{"y", VarKind::Periodic, true}});
  auto x = make_frame({{"x", VarKind::Periodic, true}});
  Form dy = Form::dx(y, 0);
  EXPECT_EQ(pullback(dy, AffineMap{x, {{1}}, {Rational(0)}}), Form::dx(x, 0));
  Form w = TrigPoly::exp_i(y, 0, Rational(1)) * dy;
  Form expected = TrigPoly::exp_i(x, 0, Rational(2)) * Form::dx(x, 0) * Scalar(2);
  EXPECT_EQ(pullback(w, AffineMap{x, {{2}}, {Rational(0)}}), expected);
  // constant map keeps only the degree-0 part evaluated at the point
  Form mixed = Form::function(TrigPoly::exp_i(y, 0, Rational(1))) + w;
  EXPECT_EQ(pullback(mixed, AffineMap{x, {{0}}, {frac(1, 2)}}), Form::constant(x, Scalar(-1)));
}

TEST(Form, FiberIntegration) {
  auto f = make_frame({{"x1", VarKind::Periodic, true},
                       {"x2", VarKind::Periodic, true},
                       {"s", VarKind::Interval, true}});
  auto base = Frame::torus(2);
  TrigPoly s = TrigPoly::monomial_power(f, 2, 1);
  Form ds = Form::dx(f, 2);
  EXPECT_EQ(fiber_integrate_I(s * wedge(ds, Form::dx(f, 0)), 2), Form::dx(base, 0) * Scalar(frac(1, 2)));
  EXPECT_TRUE(fiber_integrate_I(Form::dx(f, 0), 2).is_zero());
  TrigPoly beta22 = s - s * s;
  Form w = beta22 * wedge(ds, wedge(Form::dx(f, 0), Form::dx(f, 1)));
  EXPECT_EQ(fiber_integrate_I(w, 2), wedge(Form::dx(base, 0), Form::dx(base, 1)) * Scalar(frac(1, 6)));
}

/// d_T squares to zero on T-invariant forms.
TEST(FormProperty, DTSquaredIsZero) {
  std::mt19937_64 rng(32);
  auto f = Frame::torus(3);
  for (int trial = 0; trial < 1000; ++trial) {
    Form w = fixtures::random_form(rng, f, static_cast<int>(rng() % 4));
    ASSERT_TRUE(d_T(d_T(w)).is_zero()) << to_string(w);
  }
}

/// d_T(a b) = d_T(a) b + (-1)^{deg a} a d_T(b).
TEST(FormProperty, GradedLeibniz) {
  std::mt19937_64 rng(33);
  auto f = Frame::torus(3);
  for (int trial = 0; trial < 300; ++trial) {
    int ja = static_cast<int>(rng() % 3);
    Form a = fixtures::random_form(rng, f, ja);
    Form b = fixtures::random_form(rng, f, static_cast<int>(rng() % 3));
    Form rhs = wedge(d_T(a), b) + wedge(a, d_T(b)) * Scalar(ja % 2 ? -1 : 1);
    ASSERT_EQ(d_T(wedge(a, b)), rhs);
  }
}

/// Pullback along integer affine maps commutes with d and wedge.
TEST(FormProperty, PullbackIsFunctorial) {
  std::mt19937_64 rng(34);
  auto src = Frame::torus(2);
  auto dst = Frame::torus(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> quarter(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    AffineMap phi{dst, {}, {}};
    for (int k = 0; k < 2; ++k) {
      phi.coeff.push_back({entry(rng), entry(rng), entry(rng)});
      phi.offset.push_back(frac(quarter(rng), 4));
    }
    Form a = fixtures::random_form(rng, src, static_cast<int>(rng() % 3));
    Form b = fixtures::random_form(rng, src, static_cast<int>(rng() % 3));
    ASSERT_EQ(pullback(exterior_d(a), phi), exterior_d(pullback(a, phi)));
    ASSERT_EQ(pullback(d_T(a), phi), d_T(pullback(a, phi)));
    ASSERT_EQ(pullback(wedge(a, b), phi), wedge(pullback(a, phi), pullback(b, phi)));
  }
}
