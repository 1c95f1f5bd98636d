#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chenchern/chen_integral.hpp"
#include "chenchern/chern.hpp"
#include "chenchern/corpus.hpp"
#include "chenchern/norms.hpp"
#include "support.hpp"

using namespace chenchern;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST(Seminorm, Examples) {
  auto f = Frame::torus(2);
  SeminormSpec eps{3.0};
  EXPECT_DOUBLE_EQ(form_seminorm(Form::constant(f, Scalar(1)), eps), 1.0);
  Form w = Form::dx(f, 0) * Scalar(2) + wedge(Form::theta(f), wedge(Form::dx(f, 0), Form::dx(f, 1))) * Scalar::i();
  EXPECT_DOUBLE_EQ(form_seminorm(w, eps), 2 * 3.0 + 9.0);
  EXPECT_NEAR(form_seminorm(Form::dx(f, 1) * Scalar::tau(), SeminormSpec{1.0}), kTwoPi, 1e-12);
}

TEST(SeminormProperty, TriangleAndHomogeneity) {
  std::mt19937_64 rng(81);
  auto f = Frame::torus(2);
  SeminormSpec eps{2.0};
  for (int k = 0; k < 200; ++k) {
    Form a = fixtures::random_form(rng, f, 1, 3);
    Form b = fixtures::random_form(rng, f, 1, 3);
    Scalar lambda(fixtures::random_rational(rng), fixtures::random_rational(rng));
    const double na = form_seminorm(a, eps);
    EXPECT_LE(form_seminorm(a + b, eps), na + form_seminorm(b, eps) + 1e-12);
    EXPECT_NEAR(form_seminorm(a * lambda, eps), std::abs(numeric_eval(lambda)) * na, 1e-12 * (1 + na));
  }
}

TEST(TensorSeminorm, Examples) {
  auto f = Frame::torus(1);
  SeminormSpec eps{1.0};
  Form one = Form::constant(f, Scalar(1));
  Form w = Form::dx(f, 0) * Scalar(3);
  EXPECT_DOUBLE_EQ(tensor_seminorm_upper(Chain::tensor({one, w}), eps), 3.0);
  EXPECT_DOUBLE_EQ(tensor_seminorm_upper(Chain(f), eps), 0.0);
  Chain twice = Chain::tensor({w, w}) + Chain::tensor({w, w});
  EXPECT_DOUBLE_EQ(tensor_seminorm_upper(twice, eps), 2 * 9.0);
}

TEST(Kappa, Examples) {
  auto f = Frame::torus(1);
  SeminormSpec eps{1.0};
  TrigPoly p = TrigPoly::exp_i(f, 0, Rational(1)) * Scalar(frac(1, 2)) + TrigPoly::constant(f, Scalar(2));
  Form fn = Form::function(p);
  EXPECT_DOUBLE_EQ(kappa_upper(Chain::tensor({fn}), eps, 6), form_seminorm(fn, eps));
  EXPECT_DOUBLE_EQ(kappa_upper(Chain(f), eps, 6), 0.0);
  Form w = Form::dx(f, 0);
  Chain c = Chain::tensor({fn, w, w});
  EXPECT_NEAR(kappa_upper(c, eps, 6), 2.5 / std::sqrt(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(kappa_upper(c, eps, 1), 0.0);
}

TEST(KappaProperty, GammaDoesNotIncrease) {
  std::mt19937_64 rng(82);
  auto f = Frame::torus(2);
  for (double base : {1.0, 2.5}) {
    for (int k = 0; k < 50; ++k) {
      Chain w = fixtures::random_chain(rng, f);
      EXPECT_LE(kappa_upper(gamma(w), SeminormSpec{base}, 6), kappa_upper(w, SeminormSpec{base}, 6) + 1e-12);
    }
  }
}

TEST(KappaProperty, ConnesOperatorConstantIsFinite) {
  std::mt19937_64 rng(83);
  auto f = Frame::torus(2);
  SeminormSpec eps{1.0};
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    Chain w = fixtures::random_chain(rng, f, 3);
    const double kw = kappa_upper(w, eps, 8);
    if (kw == 0) continue;
    worst = std::max(worst, kappa_upper(connes_B(w), eps, 8) / kw);
  }
  EXPECT_TRUE(std::isfinite(worst));
  RecordProperty("empirical_B_constant", std::to_string(worst));
}

TEST(GrowthConstant, Examples) {
  SeminormSpec eps{1.0};
  EXPECT_DOUBLE_EQ(chern_growth_constant(UnitaryMap::identity(Frame::torus(2), 2), eps), 1.0);
  EXPECT_NEAR(chern_growth_constant(circle_map(1), eps), kTwoPi, 1e-6);
  UnitaryMap block = direct_sum(circle_map(1), UnitaryMap::identity(Frame::torus(1), 1));
  EXPECT_NEAR(chern_growth_constant(block, eps), kTwoPi, 1e-6);
}

TEST(GrowthTail, MatchesLongPartialSum) {
  for (double x : {0.5, 2.0, kTwoPi}) {
    double direct = 0;
    for (int n = 21; n <= 400; ++n) direct += std::exp(std::log(n) + n * std::log(x) - 0.5 * std::lgamma(n + 1.0));
    EXPECT_GE(growth_tail(x, 20), direct * (1 - 1e-12));
    EXPECT_LE(growth_tail(x, 20), direct * 1.01 + 1e-300);
  }
  EXPECT_EQ(growth_tail(0.0, 5), 0.0);
}

TEST(GrowthBound, CircleExplicitToTwenty) {
  GrowthReport r = growth_bound_check(circle_map(1), SeminormSpec{1.0}, 20, 20);
  EXPECT_TRUE(r.holds) << r.lhs << " vs " << r.rhs;
  EXPECT_GT(r.lhs, 0);
  EXPECT_NEAR(r.constant, kTwoPi, 1e-6);
}

TEST(GrowthBound, ConstantMap) {
  GrowthReport r = growth_bound_check(UnitaryMap::identity(Frame::torus(1), 2), SeminormSpec{1.0}, 20, 4);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(GrowthBound, Corpus) {
  for (const auto& [name, g] : identity_corpus()) {
    for (double base : {1.0, 2.0}) {
      GrowthReport r = growth_bound_check(g, SeminormSpec{base}, 20, 3);
      EXPECT_TRUE(r.holds) << name << " " << r.lhs << " vs " << r.rhs;
    }
  }
}

/// The factored bound dominates the expanded chain's representation bound.
TEST(GrowthBound, FactoredBoundDominatesExpansion) {
  SeminormSpec eps{1.0};
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= 3; ++n) {
      const double expanded = tensor_seminorm_upper(chern_minus(g, n), eps);
      EXPECT_LE(expanded, chern_component_bound(g, eps, n) * (1 + 1e-9) + 1e-12) << name << " n=" << n;
    }
  }
}

/// sup |tilde-rho coefficients| <= (1/n!) prod (eps(alpha_i) + eps(beta_i))
/// on constant loops through the identity and on a unit-speed loop.
TEST(Continuity, TildeRhoEstimate) {
  std::mt19937_64 rng(84);
  auto f = Frame::torus(2);
  SeminormSpec eps{1.0};
  Plot loop{0, 2, {{}, {}}, {1, 0}, {Rational(0), Rational(0)}, "loop"};
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 3;
    std::vector<Form> slots;
    double bound = 1.0 / factorial(n);
    for (int i = 0; i <= n; ++i) {
      Form w = fixtures::random_form(rng, f, i == 0 ? 0 : 1, 2, 2);
      bound *= form_seminorm(alpha_part(w), eps) + form_seminorm(beta_part(w), eps);
      slots.push_back(w);
    }
    Chain c(f);
    c.add_tensor(slots);
    for (const Plot& p : {identity_plot(2), loop}) {
      EXPECT_LE(form_seminorm(tilde_rho_eval(c, p), eps), bound + 1e-9) << p.label;
    }
  }
}
