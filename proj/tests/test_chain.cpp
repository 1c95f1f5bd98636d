#include <gtest/gtest.h>

#include "support.hpp"

using namespace chenchern;

namespace {

FramePtr t2() { return Frame::torus(2); }

Form e1(const FramePtr& f, int k) { return Form::function(TrigPoly::exp_i(f, 0, Rational(k))); }

}  // namespace

TEST(Chain, GammaExamples) {
  auto f = t2();
  Chain w = Chain::tensor({Form::dx(f, 0)});
  EXPECT_EQ(gamma(w), -w);
  Chain one = Chain::tensor({Form::constant(f, Scalar(1))});
  EXPECT_EQ(gamma(one), one);
  std::mt19937_64 rng(41);
  Chain r = fixtures::random_chain(rng, f);
  EXPECT_EQ(gamma(gamma(r)), r);
}

TEST(Chain, UnitsInLaterSlotsVanish) {
  auto f = t2();
  Form one = Form::constant(f, Scalar(3));
  EXPECT_TRUE(Chain::tensor({Form::dx(f, 0), one}).is_zero());
  Form mixed = one + Form::dx(f, 1);
  EXPECT_EQ(Chain::tensor({Form::dx(f, 0), mixed}), Chain::tensor({Form::dx(f, 0), Form::dx(f, 1)}));
}

TEST(Chain, BOfFunctionIsDTOfFunction) {
  auto f = t2();
  Form g = e1(f, 2);
  EXPECT_EQ(hochschild_b(Chain::tensor({g})), Chain::tensor({d_T(g)}));
  EXPECT_TRUE(hochschild_b(Chain::tensor({Form::constant(f, Scalar(1))})).is_zero());
}

TEST(Chain, BOfOneTensorOmegaVanishes) {
  auto f = t2();
  Chain w = Chain::tensor({Form::constant(f, Scalar(1)), Form::dx(f, 0) + e1(f, 1)});
  EXPECT_TRUE(connes_B(w).is_zero());
}

TEST(Chain, ChainEquality) {
  auto f = t2();
  std::mt19937_64 rng(42);
  Chain w = fixtures::random_chain(rng, f);
  EXPECT_TRUE(chain_equal(w, w));
  EXPECT_TRUE(chain_equal(w, w + Chain::tensor({Form(f)})));
  EXPECT_FALSE(chain_equal(Chain::tensor({Form::dx(f, 0)}), Chain::tensor({Form::dx(f, 0) * Scalar(2)})));
}

TEST(Chain, DegenerateExamples) {
  auto f = t2();
  Form w0 = Form::dx(f, 0);
  Form w2 = e1(f, 1) * Scalar(2) + Form::dx(f, 1);
  EXPECT_TRUE(make_degenerate(DegenerateKind::Slot0Form, {w0, Form::constant(f, Scalar(1)), w2}, 1).is_zero());
  EXPECT_TRUE(make_degenerate(DegenerateKind::Leibniz, {w0, Form::constant(f, Scalar(5)), w2}, 1).is_zero());
  EXPECT_TRUE(make_degenerate(DegenerateKind::Leibniz, {w0, w2, Form::constant(f, Scalar(5))}, 2).is_zero());
  EXPECT_THROW(make_degenerate(DegenerateKind::Leibniz, {w0, Form::dx(f, 1)}, 1), std::invalid_argument);
  EXPECT_THROW(make_degenerate(DegenerateKind::Leibniz, {w0, e1(f, 1)}, 2), std::invalid_argument);
}

/// The super-complex relations hold exactly for the shipped sign convention
/// of B; the alternative value of r_{-1} breaks them.
TEST(ChainProperty, BoundaryConventionCalibration) {
  auto f = t2();
  std::mt19937_64 rng(43);
  bool alternative_fails = false;
  for (int trial = 0; trial < 40; ++trial) {
    Chain w = fixtures::random_chain(rng, f);
    Chain bb = hochschild_b(connes_B(w, kDefaultBoundary)) + connes_B(hochschild_b(w), kDefaultBoundary);
    ASSERT_TRUE(bb.is_zero()) << to_string(w);
    const auto other = kDefaultBoundary == BoundaryConvention::MinusOne ? BoundaryConvention::Zero
                                                                        : BoundaryConvention::MinusOne;
    Chain alt = hochschild_b(connes_B(w, other)) + connes_B(hochschild_b(w), other);
    if (!alt.is_zero()) alternative_fails = true;
  }
  EXPECT_TRUE(alternative_fails);
}

/// b^2 = 0, B^2 = 0, bB + Bb = 0 and Gamma anticommutes with b and B.
TEST(ChainProperty, SuperComplexRelations) {
  auto f = t2();
  std::mt19937_64 rng(44);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Chain w = fixtures::random_chain(rng, f);
    Chain bw = hochschild_b(w);
    Chain Bw = connes_B(w);
    if (!bw.is_zero() && !Bw.is_zero() && !hochschild_b(Bw).is_zero()) ++nontrivial;
    ASSERT_TRUE(hochschild_b(bw).is_zero()) << to_string(w);
    ASSERT_TRUE(connes_B(Bw).is_zero()) << to_string(w);
    ASSERT_TRUE((hochschild_b(Bw) + connes_B(bw)).is_zero()) << to_string(w);
    ASSERT_EQ(gamma(bw), -hochschild_b(gamma(w)));
    ASSERT_EQ(gamma(Bw), -connes_B(gamma(w)));
  }
  EXPECT_GE(nontrivial, 50);
}
