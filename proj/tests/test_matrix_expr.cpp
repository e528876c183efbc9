#include <gtest/gtest.h>

#include <Eigen/LU>
#include <algorithm>

#include "riemann/gen.hpp"
#include "riemann/matrix_expr.hpp"

using namespace riemann;

namespace {

using M3 = Mat3<Rational>;

M3 diag(int x, int y, int z) {
  M3 m = M3::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

Rational tr(const M3& m) { return m.trace(); }

const FBlocks<Rational> kUnit(M3::Identity(), M3::Identity(), M3::Zero());

std::vector<std::string> keys(const std::vector<MatrixExpr>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.key());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(MatrixExpr, TableEntries) {
  EXPECT_EQ(parse_matrix_expr("tr(Ap^4 + Am^4)").evaluate(kUnit), 6);
  EXPECT_EQ(parse_matrix_expr("R*det(B)").evaluate(FBlocks<Rational>(diag(1, 2, 3), diag(3, 2, 1), M3::Zero())), 0);
  EXPECT_EQ(parse_matrix_expr("R^2*tr(B*Bt)").evaluate(kUnit), 0);
  EXPECT_EQ(parse_matrix_expr("R").evaluate(kUnit), 24);
  EXPECT_EQ(parse_matrix_expr("R^2/4 - 3").evaluate(kUnit), 141);
}

TEST(MatrixExpr, AgreesWithDirectArithmetic) {
  for (const auto& F : random_samples({8, 9, Domain::general}, 10)) {
    const M3 &P = F.a_plus(), &N = F.a_minus(), &B = F.b();
    const M3 Bt = B.transpose();
    const Rational R = 4 * (tr(P) + tr(N));
    EXPECT_EQ(parse_matrix_expr("tr(B*Bt*B*Bt)").evaluate(F), tr(B * Bt * B * Bt));
    EXPECT_EQ(parse_matrix_expr("tr(Ap*B*Am*Bt)").evaluate(F), tr(P * B * N * Bt));
    EXPECT_EQ(parse_matrix_expr("R*det(B) - 2*tr(B^3)").evaluate(F), R * B.determinant() - 2 * tr(B * B * B));
    EXPECT_EQ(parse_matrix_expr("tr(Ap^2)^2 - tr(Am)/3").evaluate(F), tr(P * P) * tr(P * P) - tr(N) / 3);
    EXPECT_EQ(parse_matrix_expr("Ap*B - 2*I").evaluate_matrix(F), M3(P * B - 2 * M3::Identity()));
  }
}

TEST(MatrixExpr, ParseErrors) {
  EXPECT_THROW(parse_matrix_expr("Ap + 1"), ParseError);
  EXPECT_THROW(parse_matrix_expr("tr(R)"), ParseError);
  EXPECT_THROW(parse_matrix_expr("tr(Ap"), ParseError);
  EXPECT_THROW(parse_matrix_expr("Q"), ParseError);
  EXPECT_THROW(parse_matrix_expr("R/0"), ParseError);
  EXPECT_THROW(parse_matrix_expr("Ap^0"), ParseError);
  EXPECT_THROW(parse_matrix_expr(""), ParseError);
}

TEST(MatrixExpr, StrRoundTrips) {
  for (const char* text : {"16*(tr(Ap^2) + 2*tr(B*Bt) + tr(Am^2))", "R^3/4 + 16*R*tr(B*Bt)", "-tr(Ap*B^3)",
                           "det(B)*R - tr(Bt*Ap*B)"}) {
    const auto e = parse_matrix_expr(text);
    const auto back = parse_matrix_expr(e.str());
    for (const auto& F : random_samples({4, 9, Domain::general}, 3)) EXPECT_EQ(back.evaluate(F), e.evaluate(F)) << text;
  }
}

TEST(MatrixExpr, KeyIgnoresOrder) {
  EXPECT_EQ(parse_matrix_expr("tr(Ap^2) + tr(Am^2)").key(), parse_matrix_expr("tr(Am^2) + tr(Ap^2)").key());
  EXPECT_EQ(parse_matrix_expr("R*tr(Ap)").key(), parse_matrix_expr("tr(Ap)*R").key());
  EXPECT_EQ(parse_matrix_expr("tr(Ap*B)").key(), parse_matrix_expr("tr(B*Ap)").key());
  EXPECT_NE(parse_matrix_expr("tr(Ap*B*Bt)").key(), parse_matrix_expr("tr(Ap*Bt*B)").key());
}

TEST(MatrixExpr, ParityImage) {
  const auto e = parse_matrix_expr("tr(Ap^2*B*Am*Bt) + R*tr(Ap^3)");
  for (const auto& F : random_samples({6, 9, Domain::general}, 5))
    EXPECT_EQ(e.parity_image().evaluate(F), e.evaluate(parity(F)));
}

TEST(PseudoVariant, Hirzebruch) {
  const auto v = parse_matrix_expr("tr(Ap^2 + Am^2)").pseudo_variants();
  ASSERT_EQ(v.size(), 1u);
  for (const auto& F : random_samples({10, 9, Domain::general}, 5))
    EXPECT_EQ(v[0].evaluate(F), tr(F.a_plus() * F.a_plus()) - tr(F.a_minus() * F.a_minus()));
}

TEST(PseudoVariant, QuarticThree) {
  const auto v = parse_matrix_expr("R^2*tr(Ap^2 + Am^2)").pseudo_variants();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].key(), parse_matrix_expr("R^2*tr(Ap^2 - Am^2)").key());
}

TEST(PseudoVariant, IsParityOdd) {
  for (const char* text : {"tr(Ap^3 + Am^3)", "tr(Bt*Ap*B) + tr(B*Am*Bt)", "tr(Ap*B^3) + tr(Am*Bt^3)"}) {
    const auto e = parse_matrix_expr(text);
    for (const auto& v : e.pseudo_variants())
      for (const auto& F : random_samples({12, 9, Domain::general}, 5))
        EXPECT_EQ(v.evaluate(parity(F)), -v.evaluate(F)) << text;
  }
}

TEST(PseudoVariant, DoubleFlipRestores) {
  for (const char* text : {"tr(Ap^2 + Am^2)", "R*tr(Ap^3 + Am^3)", "tr(Bt*Ap^2*B) + tr(B*Am^2*Bt)"}) {
    const auto e = parse_matrix_expr(text);
    const auto once = e.pseudo_variants();
    ASSERT_FALSE(once.empty()) << text;
    const auto twice = once[0].pseudo_variants();
    EXPECT_NE(std::find_if(twice.begin(), twice.end(), [&](const MatrixExpr& x) { return x.key() == e.key(); }),
              twice.end())
        << text;
  }
  EXPECT_FALSE(parse_matrix_expr("R^2").pseudo_variant().has_value());
  EXPECT_FALSE(parse_matrix_expr("tr(B*Bt)").pseudo_variant().has_value());
}

TEST(Sectors, Consistency) {
  std::string why;
  EXPECT_TRUE(parse_matrix_expr("tr(Ap*B*Am*Bt)").sector_consistent());
  EXPECT_TRUE(parse_matrix_expr("tr(Bt*Ap*B) + R*det(B)").sector_consistent());
  EXPECT_FALSE(parse_matrix_expr("tr(Ap*Am)").sector_consistent(&why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(parse_matrix_expr("tr(Ap*B)").sector_consistent());
}

TEST(Sectors, KeysOfVariantsAreDistinct) {
  const auto v = parse_matrix_expr("tr(Ap^2)*tr(B*Bt) + tr(Am^2)*tr(B*Bt) + tr(Ap^3) + tr(Am^3)").pseudo_variants();
  EXPECT_EQ(v.size(), 2u);
  const auto k = keys(v);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_NE(k[0], k[1]);
}
