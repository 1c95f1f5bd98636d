#include <gtest/gtest.h>

#include "chenchern/chern.hpp"
#include "chenchern/corpus.hpp"

using namespace chenchern;

namespace {

Scalar itau() { return Scalar::i() * Scalar::tau(); }

Form dx(const FramePtr& f, int v) { return Form::dx(f, v); }
Form one(const FramePtr& f) { return Form::constant(f, Scalar(1)); }
Form theta(const FramePtr& f) { return Form::theta(f); }

MatForm dmat(const MatForm& m) { return entrywise(m, [](const Form& e) { return exterior_d(e); }); }

}  // namespace

TEST(MaurerCartan, Examples) {
  auto f = Frame::torus(1);
  MatForm w = maurer_cartan(circle_map(3));
  EXPECT_EQ(w(0, 0), dx(f, 0) * (itau() * Scalar(3)));
  UnitaryMap c(Frame::torus(2), 2, {ConstUnitary{{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}}});
  EXPECT_TRUE(maurer_cartan(c).is_zero());
}

TEST(MaurerCartan, StructureEquationOnCorpus) {
  auto corpus = identity_corpus();
  corpus.push_back({"l3_d5", map_l3_d5()});
  corpus.push_back({"layered_t3", layered_t3()});
  corpus.push_back({"path", homotopy_path()});
  for (const auto& [name, g] : corpus) {
    MatForm w = maurer_cartan(g);
    EXPECT_TRUE((dmat(w) + w * w).is_zero()) << name;
  }
}

TEST(MaurerCartan, Cocycle) {
  UnitaryMap g = su2_style_t2();
  UnitaryMap h(Frame::torus(2), 2,
               {DiagExp{{{frac(0, 1), frac(2, 1)}, {frac(1, 1), frac(0, 1)}}},
                ConstUnitary{{{Scalar(frac(5, 13)), Scalar(frac(12, 13))}, {Scalar(frac(-12, 13)), Scalar(frac(5, 13))}}}});
  std::vector<UnitaryGenerator> word = g.word();
  word.insert(word.end(), h.word().begin(), h.word().end());
  UnitaryMap gh(Frame::torus(2), 2, word);
  EXPECT_EQ(maurer_cartan(gh), h.inverse() * maurer_cartan(g) * h.matrix() + maurer_cartan(h));
}

TEST(ScriptAB, ScalarCase) {
  UnitaryMap g = circle_map(1);
  ScriptAB ab = script_A_B(g);
  Form w = dx(ab.frame, 0) * itau();
  TrigPoly s = TrigPoly::monomial_power(ab.frame, ab.s, 1);
  EXPECT_EQ(ab.A(0, 0), s * w);
  EXPECT_EQ(ab.B(0, 0), -wedge(theta(ab.frame), w));
}

TEST(GeneralizedTrace, ZeroLengthIsMatrixTrace) {
  UnitaryMap g = su2_style_t2();
  Chain c = generalized_trace({g.matrix()});
  EXPECT_EQ(c, Chain::tensor({trace(g.matrix())}));
}

TEST(GeneralizedTrace, SizeMismatchThrows) {
  auto f = Frame::torus(1);
  EXPECT_THROW(generalized_trace({MatForm::identity(f, 1), MatForm::identity(f, 2)}), std::invalid_argument);
}

TEST(ChernMinus, Examples) {
  UnitaryMap g = circle_map(1);
  auto f = g.frame();
  EXPECT_TRUE(chern_minus(g, 0).is_zero());
  EXPECT_EQ(chern_minus(g, 1), Chain::tensor({one(f), -wedge(theta(f), dx(f, 0) * itau())}));
  UnitaryMap c = UnitaryMap::identity(Frame::torus(2), 2);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(chern_minus(c, n).is_zero());
}

TEST(ChernMinus, OddParityAndBVanishes) {
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= 4; ++n) {
      Chain ch = chern_minus(g, n);
      EXPECT_EQ(gamma(ch), -ch) << name << " n=" << n;
      EXPECT_TRUE(connes_B(ch).is_zero()) << name << " n=" << n;
    }
  }
}

TEST(ChernPlus, Examples) {
  auto f = Frame::torus(2);
  MatForm zero(f, 2, 2);
  EXPECT_EQ(chern_plus(zero, 0), Chain::tensor({one(f)}) * Scalar(2));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(chern_plus(zero, n).is_zero());
  MatForm C = maurer_cartan(su2_style_t2()) * Scalar(frac(1, 3));
  EXPECT_EQ(chern_plus(C, 0), Chain::tensor({one(f)}) * Scalar(2));
  for (int n = 1; n <= 4; ++n) {
    Chain ch = chern_plus(C, n);
    EXPECT_EQ(gamma(ch), ch) << n;
  }
}

TEST(BChern, ScalarExample) {
  UnitaryMap g = circle_map(1);
  auto f = g.frame();
  EXPECT_EQ(b_chern_component(g, 1), Chain::tensor({one(f), dx(f, 0) * itau()}));
}

TEST(BChern, IdentityOnCorpus) {
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(bchern_identity_check(g, n)) << name << " n=" << n;
  }
  EXPECT_TRUE(bchern_identity_check(UnitaryMap::identity(Frame::torus(2), 2), 2));
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(bchern_identity_check(layered_t3(), n)) << "layered n=" << n;
}

/// Each Leibniz generator decomposes as T_k + H_k - H_{k-1}, so the pair
/// {L_{n-1}, L_n} carries exactly T_n in length n.
TEST(Witness, LengthComponentIsTracePower) {
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= 4; ++n) {
      Chain sum = generator_sum(trace_degenerate_witness(g, n), g.frame());
      EXPECT_TRUE(chain_equal(sum.length_component(n), trace_power(g, n))) << name << " n=" << n;
    }
  }
}

/// Summing L_0..L_N telescopes to sum_{k<=N} T_k plus the top spill-over H_N.
TEST(Witness, CumulativeTelescopes) {
  UnitaryMap g = su2_style_t2();
  const int N = 3;
  Chain all(g.frame());
  Chain traces(g.frame());
  for (int k = 0; k <= N; ++k) {
    all += generator_sum(leibniz_trace_generators(g, k), g.frame());
    if (k >= 1) traces += trace_power(g, k);
  }
  Chain spill = all - traces;
  EXPECT_EQ(spill.max_length(), N + 1);
  for (int n = 0; n <= N; ++n) EXPECT_TRUE(spill.length_component(n).is_zero()) << n;
}

TEST(Witness, ScalarTwoForm) {
  UnitaryMap g = circle_map(1);
  auto f = g.frame();
  Form w = dx(f, 0) * itau();
  Chain sum = generator_sum(trace_degenerate_witness(g, 2), f);
  EXPECT_EQ(sum.length_component(2), Chain::tensor({one(f), w, w}));
}

TEST(Witness, ConstantMapIsEmpty) {
  UnitaryMap c = UnitaryMap::identity(Frame::torus(1), 2);
  EXPECT_TRUE(generator_sum(trace_degenerate_witness(c, 2), c.frame()).length_component(2).is_zero());
}

TEST(DirectSum, Additivity) {
  UnitaryMap g = su2_style_t2();
  UnitaryMap id = UnitaryMap::identity(g.frame(), 1);
  EXPECT_TRUE(direct_sum_chern(g, id, 4));
  EXPECT_TRUE(direct_sum_chern(circle_map(1), circle_map(2), 4));
  UnitaryMap gg = direct_sum(g, g);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(chern_minus(gg, n), chern_minus(g, n) * Scalar(2));
}

TEST(Periodicity, ScalarExample) {
  UnitaryMap g = circle_map(1);
  auto f = g.frame();
  Chain expected = Chain::tensor({one(f), -wedge(theta(f), dx(f, 0) * itau())});
  ConnectionForm C = scaled_connection(g);
  EXPECT_EQ(fiber_integrate_chain(chern_plus(C, 1), C.frame()->size() - 1), expected);
}

TEST(Periodicity, Corpus) {
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(periodicity_check(g, n)) << name << " n=" << n;
  }
}

TEST(Homotopy, ConstantPathGivesZero) {
  FramePtr frame = append_vars(Frame::torus(1), {Var{"t", VarKind::Interval, true}});
  UnitaryMap path(frame, 1, {DiagExp{{{frac(1, 1), frac(0, 1)}}}});
  for (int n = 1; n <= 2; ++n) {
    EXPECT_TRUE(build_homotopy_chain(path, n).is_zero());
    EXPECT_TRUE(homotopy_residual(path, n).is_zero());
  }
}
