#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "riemann/relations.hpp"

using namespace riemann;

namespace {

Mat3<Rational> diag(int x, int y, int z) {
  Mat3<Rational> m = Mat3<Rational>::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

const Mat3<Rational> kZero = Mat3<Rational>::Zero();
const Mat3<Rational> kId = Mat3<Rational>::Identity();

std::vector<Rational> term_values(const Relation& rel, const FBlocks<Rational>& F) {
  const Sample s(F);
  std::vector<Rational> out;
  for (const auto& t : rel.terms) out.push_back(evaluate_term(t, rel, s).scalar());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Table, NamesAreUnique) {
  std::set<std::string> names;
  const auto& t = relation_table();
  for (const auto* list : {&t.relations, &t.known_bad})
    for (const auto& r : *list) EXPECT_TRUE(names.insert(r.name).second) << r.name;
  EXPECT_GE(t.relations.size(), 70u);
  EXPECT_EQ(t.meta.size(), 3u);
  for (const auto& r : t.known_bad) EXPECT_TRUE(r.known_bad);
}

TEST(Table, Sets) {
  EXPECT_TRUE(in_set(find_relation("gauss_bonnet"), "quadratic"));
  EXPECT_TRUE(in_set(find_relation("xu_1"), "cubic"));
  EXPECT_TRUE(in_set(find_relation("harvey_19"), "quartic"));
  EXPECT_TRUE(in_set(find_relation("gen_gauss_bonnet"), "einstein"));
  EXPECT_TRUE(in_set(find_relation("odd4_0"), "pseudo"));
  EXPECT_FALSE(in_set(find_relation("harvey_15_as_published"), "all"));
  EXPECT_TRUE(in_set(find_relation("harvey_15_as_published"), "known_bad"));
  EXPECT_THROW(in_set(find_relation("xu_1"), "sextic"), InputError);
  EXPECT_THROW(find_relation("nope"), InputError);
  EXPECT_EQ(relations_in_set("known_bad").size(), relation_table().known_bad.size());
}

TEST(Verify, GaussBonnetAtUnitBlocks) {
  EXPECT_TRUE(verify(find_relation("gauss_bonnet"), FBlocks<Rational>(kId, kId, kZero)).is_zero);
}

TEST(Verify, Exp19TermByTerm) {
  const auto& rel = find_relation("exp_19");
  EXPECT_EQ(term_values(rel, FBlocks<Rational>(kId, kId, kZero)),
            sorted({20736, -41472, 18432, -4608, 6912}));
  EXPECT_TRUE(verify(rel, FBlocks<Rational>(kId, kId, kZero)).is_zero);
}

TEST(Verify, OddQuarticTermByTerm) {
  const FBlocks<Rational> F(diag(2, -1, 0), diag(1, 0, 0), kZero);
  const auto& rel = find_relation("odd4_0");
  EXPECT_EQ(term_values(rel, F), sorted({-768, 1536, -3072, 2304}));
  EXPECT_TRUE(verify(rel, F).is_zero);
}

TEST(Verify, EinsteinRelationNeedsEinsteinSample) {
  Mat3<Rational> b = kZero;
  b(1, 2) = 3;
  EXPECT_THROW(verify(find_relation("gen_gauss_bonnet"), FBlocks<Rational>(kId, kId, b)), PreconditionError);
  EXPECT_TRUE(verify(find_relation("gen_gauss_bonnet"), FBlocks<Rational>(diag(1, 2, 3), diag(3, 3, 0), kZero)).is_zero);
}

TEST(Verify, RankTwoResidualHasComponents) {
  const auto r = verify(find_relation("c_syzygy_1"), random_fblocks({1, 9, Domain::general}));
  EXPECT_EQ(r.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.values.size(), 16u);
  EXPECT_TRUE(r.is_zero);
}

TEST(VerifyAll, EmptyCount) {
  const auto rep = verify_all(3, 0);
  EXPECT_TRUE(rep.relations.empty());
  EXPECT_TRUE(rep.meta.empty());
  EXPECT_TRUE(rep.all_passed());
}

TEST(VerifyAll, EverythingHolds) {
  const auto rep = verify_all(7, 4);
  for (const auto& r : rep.relations) EXPECT_TRUE(r.as_expected()) << r.name;
  for (const auto& m : rep.meta) EXPECT_TRUE(m.passed) << m.name << ": " << m.detail;
  EXPECT_TRUE(rep.all_passed());
}

TEST(VerifyAll, KnownBadFormsFail) {
  for (const auto& r : verify_all(7, 3, relations_in_set("known_bad")).relations) {
    EXPECT_FALSE(r.passed) << r.name;
    EXPECT_TRUE(r.counterexample.has_value()) << r.name;
    EXPECT_FALSE(r.residual.is_zero);
  }
}

TEST(VerifyAll, EinsteinRelationsSeeEinsteinSamplesOnly) {
  const auto rep = verify_all(5, 3, {find_relation("gen_gauss_bonnet"), find_relation("gauss_bonnet")});
  ASSERT_EQ(rep.relations.size(), 2u);
  EXPECT_EQ(rep.relations[0].samples, 3u);
  EXPECT_EQ(rep.relations[1].samples, 6u);
}

TEST(VerifyAll, CorruptedCoefficientIsCaught) {
  Relation rel = find_relation("quartic_a");
  rel.terms[2].coef += 1;
  const auto rep = verify_all(9, 5, {rel});
  ASSERT_EQ(rep.relations.size(), 1u);
  EXPECT_FALSE(rep.relations[0].passed);
  ASSERT_TRUE(rep.relations[0].counterexample.has_value());
  EXPECT_FALSE(verify(rel, *rep.relations[0].counterexample).is_zero);
  EXPECT_FALSE(rep.all_passed());
}

TEST(VerifyAll, Deterministic) {
  const auto a = verify_all(11, 2, relations_in_set("cubic"));
  const auto b = verify_all(11, 2, relations_in_set("cubic"));
  ASSERT_EQ(a.relations.size(), b.relations.size());
  for (std::size_t k = 0; k < a.relations.size(); ++k) EXPECT_EQ(a.relations[k].samples, b.relations[k].samples);
}

TEST(Meta, ShippedChecksPass) {
  for (const auto& m : verify_meta(relation_table())) EXPECT_TRUE(m.passed) << m.name << ": " << m.detail;
}

TEST(Meta, WrongCombinationFails) {
  RelationTable t = relation_table();
  for (auto& m : t.meta)
    if (m.name == "meta_harvey_15") m.combination[0].first = Rational(1, 5);
  for (const auto& m : verify_meta(t))
    if (m.name == "meta_harvey_15") EXPECT_FALSE(m.passed);
}

TEST(Meta, TraceSpanDetectsMissingRelation) {
  RelationTable t = relation_table();
  for (auto& m : t.meta)
    if (m.name == "meta_c_syzygy_trace") m.traced = {"c_syzygy_2"};
  for (const auto& m : verify_meta(t))
    if (m.name == "meta_c_syzygy_trace") EXPECT_FALSE(m.passed) << m.detail;
}

TEST(RelationLoad, Errors) {
  const auto& cats = catalogs();
  EXPECT_THROW(load_relations("[", cats), InputError);
  EXPECT_THROW(load_relations(R"({"relations": [{"name": "x", "terms": [{"coef": "1", "mono": "R[a,b"}]}]})", cats),
               InputError);
  EXPECT_THROW(load_relations(R"({"relations": [{"name": "x", "terms": [{"coef": "1", "ref": "quartic_scalars.ZZ"}]}]})",
                              cats),
               InputError);
  EXPECT_THROW(load_relations(R"({"relations": [{"name": "x", "terms": [{"coef": "1/0", "matrix": "R"}]}]})", cats),
               InputError);
}
