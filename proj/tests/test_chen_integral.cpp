#include <gtest/gtest.h>

#include "chenchern/chen_integral.hpp"
#include "chenchern/chern.hpp"
#include "chenchern/corpus.hpp"
#include "support.hpp"

using namespace chenchern;

namespace {

Scalar itau() { return Scalar::i() * Scalar::tau(); }

Plot loop_plot(int d, std::vector<long> v) {
  return Plot{0, d, std::vector<std::vector<long>>(d), std::move(v), std::vector<Rational>(d, Rational(0)), "loop"};
}

Plot line_plot(std::vector<long> a, std::vector<long> v, std::vector<Rational> c) {
  const int d = static_cast<int>(a.size());
  Plot p{1, d, {}, std::move(v), std::move(c), "line"};
  for (long x : a) p.A.push_back({x});
  return p;
}

}  // namespace

TEST(Plot, Validation) {
  Plot p = identity_plot(2);
  EXPECT_NO_THROW(validate_plot(p));
  p.c[0] = frac(1, 3);
  EXPECT_THROW(validate_plot(p), std::invalid_argument);
  Plot q = identity_plot(2);
  q.A[1].pop_back();
  EXPECT_THROW(validate_plot(q), std::invalid_argument);
  auto f = Frame::torus(2);
  EXPECT_THROW(tilde_rho_eval(Chain::tensor({Form::dx(f, 0)}), identity_plot(3)), std::invalid_argument);
}

TEST(TildeRho, FunctionIsEvaluatedAtTimeZero) {
  auto f = Frame::torus(1);
  Chain w = Chain::tensor({Form::function(TrigPoly::exp_i(f, 0, Rational(2)))});
  Plot p = line_plot({3}, {1}, {frac(1, 4)});
  auto y = Frame::torus(1);
  // e^{i tau 2 (3y + 1/4)} = -1 * e^{i tau 6 y}
  Form expected = Form::function(TrigPoly::exp_i(y, 0, Rational(6))) * Scalar(-1);
  EXPECT_EQ(tilde_rho_eval(w, p), expected);
}

TEST(TildeRho, ThetaSlotOnConstantPlot) {
  auto f = Frame::torus(2);
  Form beta = Form::dx(f, 1) * Scalar(3) + Form::function(TrigPoly::exp_i(f, 0, Rational(1))) * Scalar(2);
  Chain w = Chain::tensor({Form::constant(f, Scalar(1)), wedge(Form::theta(f), beta)});
  Plot p = identity_plot(2);
  EXPECT_EQ(tilde_rho_eval(w, p), -beta);
  EXPECT_EQ(rho_eval(w, p), -beta);
}

TEST(TildeRho, LoopIntegralOfOneForm) {
  // <1 (x) dx> along the loop x = t gives int_0^1 i_{d/dt} dx dt = 1.
  auto f = Frame::torus(1);
  Chain w = Chain::tensor({Form::constant(f, Scalar(1)), Form::dx(f, 0)});
  EXPECT_EQ(tilde_rho_eval(w, loop_plot(1, {1})), Form::constant(Frame::torus(0), Scalar(1)));
  Chain ww = Chain::tensor({Form::constant(f, Scalar(1)), Form::dx(f, 0), Form::dx(f, 0)});
  EXPECT_EQ(tilde_rho_eval(ww, loop_plot(1, {2})), Form::constant(Frame::torus(0), Scalar(2)));
}

TEST(Rho, MeanOverTheLoop) {
  auto f = Frame::torus(1);
  TrigPoly g = TrigPoly::exp_i(f, 0, Rational(1)) + TrigPoly::constant(f, Scalar(5));
  Chain w = Chain::tensor({Form::function(g)});
  Plot p = line_plot({1}, {1}, {Rational(0)});
  EXPECT_EQ(rho_eval(w, p), Form::constant(Frame::torus(1), Scalar(5)));
}

TEST(Rho, ConstantPlotsIgnoreRotation) {
  std::mt19937_64 rng(71);
  auto f = Frame::torus(2);
  Plot p = identity_plot(2);
  p.c = {frac(1, 2), frac(3, 4)};
  for (int k = 0; k < 10; ++k) {
    Chain w = fixtures::random_chain(rng, f, 3);
    EXPECT_EQ(rho_eval(w, p), tilde_rho_eval(w, p));
  }
}

TEST(Rho, FirstChernComponentOnConstantPlot) {
  UnitaryMap g = circle_map(1);
  auto f = Frame::torus(1);
  EXPECT_EQ(rho_eval(chern_minus(g, 1), identity_plot(1)), Form::dx(f, 0) * itau());
}

TEST(TildeRho, ZeroFormSlotsVanish) {
  std::mt19937_64 rng(72);
  auto f = Frame::torus(2);
  for (const Plot& p : plot_battery(2)) {
    Chain w = Chain::tensor({fixtures::random_form(rng, f, 1), Form::function(fixtures::random_poly(rng, f)),
                             fixtures::random_form(rng, f, 1)});
    EXPECT_TRUE(tilde_rho_eval(w, p).is_zero()) << p.label;
  }
}

TEST(TildeRho, KillsDegenerateGenerators) {
  std::mt19937_64 rng(73);
  auto f = Frame::torus(2);
  int nontrivial = 0;
  for (int k = 0; k < 20; ++k) {
    Chain gen = fixtures::random_degenerate(rng, f);
    if (!gen.is_zero()) ++nontrivial;
    for (const Plot& p : plot_battery(2)) {
      EXPECT_TRUE(tilde_rho_eval(gen, p).is_zero()) << p.label << "\n" << to_string(gen);
      EXPECT_TRUE(rho_eval(gen, p).is_zero()) << p.label;
    }
  }
  EXPECT_GE(nontrivial, 10);
}

TEST(Restriction, OddChernCoefficients) {
  UnitaryMap g1 = circle_map(1);
  EXPECT_EQ(restrict_to_M(chern_minus(g1, 1)), odd_chern_form(g1, 1));
  EXPECT_TRUE(odd_chern_form(word_t3(), 2).is_zero());
  UnitaryMap g3 = layered_t3();
  Form tr3 = odd_chern_form(g3, 2);
  ASSERT_FALSE(tr3.is_zero());
  EXPECT_EQ(restrict_to_M(chern_minus(g3, 1)), odd_chern_form(g3, 1));
  EXPECT_EQ(restrict_to_M(chern_minus(g3, 2)), tr3);
  EXPECT_TRUE(restrict_to_M(chern_minus(UnitaryMap::identity(Frame::torus(2), 2), 2)).is_zero());
}

TEST(Restriction, DegreeFiveCoefficient) {
  UnitaryMap g = map_l3_d5();
  Form expected = odd_chern_form(g, 3);
  ASSERT_FALSE(expected.is_zero());
  EXPECT_EQ(rho_chern_minus(g, 3, identity_plot(5)), expected);
}

TEST(Restriction, Winding) {
  UnitaryMap g = circle_map(1);
  Form total(g.frame());
  for (int n = 1; n <= 3; ++n) total += restrict_to_M(chern_minus(g, n));
  TrigPoly coef = fourier_integral(total.component(dx_bit(0)), 0);
  EXPECT_EQ(coef.constant_term() * itau().inverse(), Scalar(1));
}

TEST(FactorizedRho, MatchesChainEvaluation) {
  for (const auto& [name, g] : identity_corpus()) {
    const int d = g.frame()->size();
    for (const Plot& p : plot_battery(d)) {
      for (int n = 1; n <= 2; ++n) {
        Chain ch = chern_minus(g, n);
        EXPECT_EQ(rho_chern_minus(g, n, p, false), tilde_rho_eval(ch, p)) << name << " " << p.label << " n=" << n;
        EXPECT_EQ(rho_chern_minus(g, n, p, true), rho_eval(ch, p)) << name << " " << p.label << " n=" << n;
      }
    }
  }
}

TEST(ChainMap, Examples) {
  auto f = Frame::torus(1);
  Chain w = Chain::tensor({Form::function(TrigPoly::exp_i(f, 0, Rational(1)))});
  EXPECT_TRUE(chain_map_check(w, identity_plot(1)));
  Form a = Form::dx(f, 0) * Scalar(2) + wedge(Form::theta(f), Form::dx(f, 0) * Scalar(frac(1, 2)));
  Chain w1 = Chain::tensor({Form::constant(f, Scalar(1)), a});
  EXPECT_TRUE(chain_map_check(w1, line_plot({1}, {1}, {Rational(0)})));
}

TEST(ChainMapProperty, RandomChainsOnBattery) {
  std::mt19937_64 rng(74);
  auto f = Frame::torus(2);
  const auto battery = plot_battery(2);
  int pairs = 0;
  int nontrivial = 0;
  for (int k = 0; k < 8; ++k) {
    Chain w = fixtures::random_chain(rng, f, 3, 1, 3);
    for (const Plot& p : battery) {
      ChainMapSides sides = chain_map_sides(w, p);
      EXPECT_EQ(sides.lhs, sides.rhs) << p.label << "\n" << to_string(w);
      if (!sides.lhs.is_zero()) ++nontrivial;
      ++pairs;
    }
  }
  EXPECT_GE(pairs, 30);
  EXPECT_GE(nontrivial, 10);
}

TEST(Homotopy, ResidualVanishesUnderTildeRho) {
  UnitaryMap path = homotopy_path();
  const int t = path.frame()->size() - 1;
  for (int n = 1; n <= 2; ++n) {
    Chain delta = chern_minus(restrict_at(path, t, Rational(1)), n) - chern_minus(restrict_at(path, t, Rational(0)), n);
    // Ch^-_1 only sees det g, which agrees at both ends.
    EXPECT_EQ(delta.is_zero(), n == 1) << n;
    Chain residual = homotopy_residual(path, n);
    if (n == 2) EXPECT_FALSE(residual.is_zero());
    for (const Plot& p : plot_battery(2)) {
      EXPECT_TRUE(tilde_rho_eval(residual, p).is_zero()) << p.label << " n=" << n;
    }
  }
}
