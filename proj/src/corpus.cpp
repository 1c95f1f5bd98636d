#include "chenchern/corpus.hpp"

namespace chenchern {

namespace {

Rational q(long num, long den = 1) { return frac(num, den); }

ConstUnitary rotation(long a, long b, long c) {
  // (1/c)[[a, -b], [b, a]] with a^2 + b^2 = c^2
  return ConstUnitary{{{Scalar(frac(a, c)), Scalar(frac(-b, c))}, {Scalar(frac(b, c)), Scalar(frac(a, c))}}};
}

ConstUnitary twisted_rotation() {
  // (1/5)[[3, 4i], [4i, 3]]
  Scalar i4 = Scalar::i() * frac(4, 5);
  return ConstUnitary{{{Scalar(frac(3, 5)), i4}, {i4, Scalar(frac(3, 5))}}};
}

}  // namespace

UnitaryMap circle_map(int k) {
  return UnitaryMap(Frame::torus(1), 1, {DiagExp{{{q(k)}}}});
}

UnitaryMap su2_style_t2() {
  return UnitaryMap(Frame::torus(2), 2,
                    {DiagExp{{{q(1), q(0)}, {q(-1), q(0)}}}, rotation(3, 4, 5), DiagExp{{{q(0), q(1)}, {q(0), q(0)}}}});
}

UnitaryMap word_t3() {
  return UnitaryMap(Frame::torus(3), 2,
                    {DiagExp{{{q(1), q(0), q(0)}, {q(0), q(0), q(0)}}}, twisted_rotation(),
                     DiagExp{{{q(0), q(1), q(0)}, {q(0), q(0), q(1)}}}});
}

UnitaryMap layered_t3() {
  return UnitaryMap(Frame::torus(3), 2,
                    {DiagExp{{{q(1), q(0), q(0)}, {q(0), q(0), q(0)}}}, rotation(3, 4, 5),
                     DiagExp{{{q(0), q(1), q(0)}, {q(0), q(0), q(0)}}}, twisted_rotation(),
                     DiagExp{{{q(0), q(0), q(1)}, {q(0), q(0), q(0)}}}});
}

UnitaryMap map_l3_d5() {
  auto block = [](int before, const ConstUnitary& u) {
    ConstUnitary out{std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3))};
    for (int i = 0; i < 3; ++i) out.entries[i][i] = Scalar(1);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out.entries[before + i][before + j] = u.entries[i][j];
    }
    return out;
  };
  std::vector<Rational> z(5, q(0));
  auto diag = [&](int v0, int v1, int v2) {
    DiagExp d{{z, z, z}};
    if (v0 >= 0) d.freq[0][v0] = q(1);
    if (v1 >= 0) d.freq[1][v1] = q(1);
    if (v2 >= 0) d.freq[2][v2] = q(1);
    return d;
  };
  return UnitaryMap(Frame::torus(5), 3,
                    {diag(0, -1, -1), block(0, rotation(3, 4, 5)), diag(-1, 1, -1), block(1, twisted_rotation()),
                     diag(2, -1, 3), block(0, rotation(5, 12, 13)), diag(-1, 4, -1)});
}

UnitaryMap small_conjugation() {
  return UnitaryMap(Frame::torus(1), 2,
                    {DiagExp{{{q(1)}, {q(0)}}}, rotation(99, 20, 101), DiagExp{{{q(-1)}, {q(0)}}}});
}

UnitaryMap homotopy_path() {
  FramePtr frame = append_vars(Frame::torus(2), {Var{"t", VarKind::Interval, true}});
  return UnitaryMap(frame, 2,
                    {DiagExp{{{q(1), q(0), q(0)}, {q(0), q(0), q(0)}}}, rotation(3, 4, 5),
                     DiagExp{{{q(0), q(0), q(1)}, {q(0), q(0), q(1, 4)}}}, twisted_rotation(),
                     DiagExp{{{q(0), q(1), q(0)}, {q(0), q(0), q(0)}}}});
}

std::vector<NamedMap> identity_corpus() {
  return {{"circle", circle_map(1)},
          {"circle_k2", circle_map(2)},
          {"su2_style_t2", su2_style_t2()},
          {"word_t3", word_t3()},
          {"small_conjugation", small_conjugation()}};
}

std::vector<NamedMap> named_corpus() {
  std::vector<NamedMap> all = identity_corpus();
  all.push_back({"layered_t3", layered_t3()});
  all.push_back({"map_l3_d5", map_l3_d5()});
  all.push_back({"homotopy_path", homotopy_path()});
  return all;
}

}  // namespace chenchern
