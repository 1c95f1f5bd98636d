#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "chenchern/commands.hpp"
#include "chenchern/corpus.hpp"
#include "chenchern/serialize.hpp"
#include "support.hpp"

using namespace chenchern;
using io::Json;

namespace {

FramePtr mixed_frame() {
  return make_frame({Var{"x1", VarKind::Periodic, true}, Var{"t", VarKind::Interval, true},
                     Var{"s", VarKind::Interval, false}});
}

Plot random_plot(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(0, 3);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> quarter(-8, 8);
  Plot p;
  p.m = dim(rng);
  p.d = 1 + dim(rng);
  p.A.assign(p.d, std::vector<long>(p.m));
  for (auto& row : p.A) {
    for (auto& x : row) x = entry(rng);
  }
  for (int j = 0; j < p.d; ++j) {
    p.v.push_back(entry(rng));
    p.c.push_back(frac(quarter(rng), 4));
  }
  p.label = "random";
  return p;
}

bool same_plot(const Plot& a, const Plot& b) {
  return a.m == b.m && a.d == b.d && a.A == b.A && a.v == b.v && a.c == b.c && a.label == b.label;
}

}  // namespace

TEST(Serialize, ScalarLayout) {
  Scalar s = Scalar(frac(-3, 4), frac(1, 2), 2) + Scalar(1);
  EXPECT_EQ(io::to_json(s).dump(), R"({"0":[1,1,0,1],"2":[-3,4,1,2]})");
  EXPECT_EQ(io::to_json(Scalar()).dump(), "{}");
  const Rational huge = parse_rational("123456789012345678901234567891/7");
  Json big = io::to_json(Scalar(huge));
  EXPECT_EQ(big.dump(), R"({"0":["123456789012345678901234567891",7,0,1]})");
  EXPECT_EQ(io::scalar_from_json(big), Scalar(huge));
}

TEST(Serialize, RejectsMalformedScalars) {
  EXPECT_THROW(io::scalar_from_json(Json::parse(R"({"x":[1,1,0,1]})")), io::FormatError);
  EXPECT_THROW(io::scalar_from_json(Json::parse(R"({"0":[1,0,0,1]})")), io::FormatError);
  EXPECT_THROW(io::scalar_from_json(Json::parse(R"({"0":[1,1,0]})")), io::FormatError);
  EXPECT_THROW(io::scalar_from_json(Json::parse(R"({"0":[0,1,0,1]})")), io::FormatError);
  EXPECT_THROW(io::scalar_from_json(Json::parse(R"({"0":["1.5",1,0,1]})")), io::FormatError);
  EXPECT_THROW(io::scalar_from_json(Json::parse("[1]")), io::FormatError);
}

TEST(Serialize, RejectsMalformedObjects) {
  auto f = Frame::torus(2);
  Json form = io::to_json(Form::dx(f, 1));
  form["components"][0]["dx"] = Json::array({5});
  EXPECT_THROW(io::form_from_json(form), io::FormatError);
  Json chain = io::to_json(Chain::tensor({Form::constant(f, Scalar(1)), Form::dx(f, 0)}));
  chain["tensors"][0]["slots"][1]["monomial"] = Json::array({1, 0, 0, 0});
  EXPECT_THROW(io::chain_from_json(chain), io::FormatError);
  Json plot = io::to_json(identity_plot(2));
  plot["c"][0] = "1/3";
  EXPECT_THROW(io::plot_from_json(plot), io::FormatError);
  plot.erase("A");
  EXPECT_THROW(io::plot_from_json(plot), io::FormatError);
  EXPECT_THROW(io::parse_map_spec("no_such_map"), io::FormatError);
  EXPECT_THROW(io::parse_text("{", "inline"), io::FormatError);
}

TEST(SerializeProperty, RoundTrips) {
  std::mt19937_64 rng(91);
  int count = 0;
  for (int k = 0; k < 400; ++k) {
    const FramePtr frame = k % 2 == 0 ? Frame::torus(2) : mixed_frame();
    Chain w = fixtures::random_chain(rng, frame, 3, 2, 3);
    Json j = io::to_json(w);
    Chain back = io::chain_from_json(io::parse_text(io::dump(j), "chain"));
    ASSERT_EQ(back, w);
    ASSERT_EQ(io::dump(io::to_json(back)), io::dump(j));
    ++count;
  }
  for (int k = 0; k < 400; ++k) {
    const FramePtr frame = k % 2 == 0 ? Frame::torus(3) : mixed_frame();
    Form w = fixtures::random_form(rng, frame, k % 3, 3, 3);
    ASSERT_EQ(io::form_from_json(io::parse_text(io::dump(io::to_json(w)), "form")), w);
    ++count;
  }
  for (int k = 0; k < 200; ++k) {
    Plot p = random_plot(rng);
    ASSERT_TRUE(same_plot(io::plot_from_json(io::parse_text(io::dump(io::to_json(p)), "plot")), p));
    ++count;
  }
  for (int k = 0; k < 200; ++k) {
    Scalar s = fixtures::random_scalar(rng, 4);
    ASSERT_EQ(io::scalar_from_json(io::to_json(s)), s);
    ++count;
  }
  EXPECT_GE(count, 1000);
}

TEST(Serialize, MapsRoundTrip) {
  for (const auto& [name, g] : named_corpus()) {
    UnitaryMap back = io::map_from_json(io::to_json(g));
    EXPECT_EQ(back.matrix(), g.matrix()) << name;
    EXPECT_EQ(io::parse_map_spec(name).matrix(), g.matrix()) << name;
    EXPECT_EQ(io::parse_map_spec(io::to_json(g).dump()).matrix(), g.matrix()) << name;
  }
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Golden, ChernMinusOfCircle) {
  const std::string golden = slurp(std::string(CHENCHERN_GOLDEN_DIR) + "/chern_minus_circle_n1.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(io::dump(chern_document(circle_map(1), 1, true)), golden);
  const Chain ch = chain_of_document(io::parse_text(golden, "golden"));
  auto f = Frame::torus(1);
  const Form w = Form::dx(f, 0) * (Scalar::i() * Scalar::tau());
  EXPECT_EQ(ch, Chain::tensor({Form::constant(f, Scalar(1)), -wedge(Form::theta(f), w)}));
}

TEST(Golden, ChernPlusOfConstantMap) {
  const std::string golden = slurp(std::string(CHENCHERN_GOLDEN_DIR) + "/chern_plus_constant_n0.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(io::dump(chern_document(UnitaryMap::identity(Frame::torus(2), 2), 0, false)), golden);
}

TEST(Serialize, ChernDocumentsAreDeterministic) {
  const UnitaryMap g = su2_style_t2();
  EXPECT_EQ(io::dump(chern_document(g, 3, true)), io::dump(chern_document(g, 3, true)));
  EXPECT_TRUE(chain_of_document(chern_document(UnitaryMap::identity(Frame::torus(1), 2), 0, true)).is_zero());
}
