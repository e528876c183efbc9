#include <gtest/gtest.h>

#include "oracle.hpp"
#include "riemann/gen.hpp"
#include "riemann/monomial.hpp"

using namespace riemann;

namespace {

Mat3<Rational> diag(int x, int y, int z) {
  Mat3<Rational> m = Mat3<Rational>::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

}  // namespace

TEST(Parse, FreeLabels) {
  EXPECT_EQ(parse_monomial("R[a,b,c,d]*R[a,b,c,d]").rank(), 0u);
  const auto e = parse_monomial("R[a,c,b,d]*Rc[c,d]");
  EXPECT_EQ(e.free_labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(parse_monomial("-1/4*Sc^2*Rc[a,b]").coefficient(), Rational(-1, 4));
  EXPECT_EQ(parse_monomial("Sc^3").factors().size(), 3u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_monomial("R[a,b,c]"), ParseError);
  EXPECT_THROW(parse_monomial("R[a,a,a,b]"), ParseError);
  EXPECT_THROW(parse_monomial("Q[a,b]"), ParseError);
  EXPECT_THROW(parse_monomial("Sc[a]"), ParseError);
  EXPECT_THROW(parse_monomial("R[a,b,c,d]*"), ParseError);
  EXPECT_THROW(parse_monomial("Rc[a,b] Rc[a,b]"), ParseError);
  try {
    parse_monomial("R[a,b,c]");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Parse, StrRoundTrips) {
  for (const char* text : {"R[a,b,c,d]*R[a,b,c,d]", "-1/4*Sc^2*Rc[a,b]", "eps[a,b,c,d]*R[a,b,c,d]",
                           "delta[a,b]*W[c,d,e,f]*W[c,d,e,f]"}) {
    const auto e = parse_monomial(text);
    EXPECT_EQ(parse_monomial(e.str()).str(), e.str()) << text;
  }
}

TEST(Renamed, TracesRank2) {
  const auto e = parse_monomial("Sc*Rc[a,c]*Rc[b,c]").renamed("b", "a");
  EXPECT_EQ(e.rank(), 0u);
  EXPECT_THROW(parse_monomial("R[a,b,c,d]*Rc[a,e]").renamed("e", "a"), InputError);
}

TEST(Evaluate, KretschmannOfConstantCurvature) {
  EXPECT_EQ(evaluate_monomial(parse_monomial("R[a,b,c,d]*R[a,b,c,d]"), constant_curvature(Rational(24))).scalar(),
            96);
}

TEST(Evaluate, ZeroTensor) {
  for (const char* text : {"Sc^2", "R[a,b,c,d]*R[a,b,c,d]", "W[a,b,c,d]*W[a,b,c,d]", "Rc[a,b]*R[a,c,b,d]"})
    EXPECT_TRUE(evaluate_monomial(parse_monomial(text), Rank4<Rational>()).is_zero());
}

TEST(Evaluate, HirzebruchExample) {
  const auto T = reconstruct(FBlocks<Rational>(diag(2, -1, 0), diag(1, 0, 0), Mat3<Rational>::Zero()));
  const auto e = parse_monomial("eps[c,d,e,f]*R[a,b,c,d]*R[a,b,e,f]");
  EXPECT_EQ(evaluate_monomial(e, T).scalar(), 128);
  EXPECT_EQ(oracle::evaluate(e, T)[0], 128);
}

TEST(Evaluate, AgreesWithNestedLoops) {
  const std::vector<std::string> exprs = {
      "Sc^2*Rc[a,b]",
      "Rc[a,c]*Rc[d,e]*R[b,e,c,d]",
      "R[a,e,c,g]*R[b,f,d,g]*R[c,d,e,f]",
      "eps[a,b,e,f]*R[e,f,c,d]",
      "delta[a,b]*R[c,d,e,f]*R[c,d,e,f]",
      "W[a,b,c,d]*W[c,d,e,f]*W[e,f,a,b]",
      "1/3*R[a,b,c,d]*R[c,d,e,f]*R[e,f,g,h]*R[g,h,a,b]",
      "eps[a1,a2,b1,b2]*R[a,b,a1,a2]*R[c,b1,d,b2]",
  };
  const auto samples = random_samples({17, 9, Domain::general}, 2);
  for (const auto& F : samples) {
    const auto T = reconstruct(F);
    const ContractionEvaluator ev(T);
    for (const auto& text : exprs) {
      const auto e = parse_monomial(text);
      EXPECT_EQ(ev.evaluate(e).values, oracle::evaluate(e, T)) << text;
    }
  }
}

TEST(Evaluate, OutputOrder) {
  const auto T = reconstruct(random_fblocks({3, 9, Domain::general}));
  const auto e = parse_monomial("Rc[a,c]*R[b,c,d,e]*R[d,e,b,f]*Rc[f,a]*Rc[g,h]");
  const auto ab = evaluate_monomial(e, T, {"g", "h"});
  const auto ba = evaluate_monomial(e, T, {"h", "g"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(ab.at({i, j}), ba.at({j, i}));
  EXPECT_EQ(ab.values, oracle::evaluate(e, T, {"g", "h"}));
  EXPECT_THROW(evaluate_monomial(e, T, {"g", "x"}), InputError);
}

TEST(Evaluate, RationalTensors) {
  auto T = constant_curvature(Rational(1, 3)) + reconstruct(random_fblocks({9, 9, Domain::general}));
  const auto e = parse_monomial("R[a,b,c,d]*R[c,d,e,f]*W[e,f,a,b]");
  EXPECT_EQ(evaluate_monomial(e, T).values, oracle::evaluate(e, T));
}
