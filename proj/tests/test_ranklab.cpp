#include <gtest/gtest.h>

#include <algorithm>

#include "fingerprint.hpp"
#include "oracle.hpp"
#include "riemann/ranklab.hpp"
#include "riemann/relations.hpp"

using namespace riemann;
using fingerprint::over_catalog;

namespace {

std::vector<std::vector<Rational>> random_matrix(std::uint64_t seed, int rows, int rank, int cols) {
  SplitMix64 g(seed);
  std::vector<std::vector<Rational>> basis(rank, std::vector<Rational>(cols));
  for (auto& r : basis)
    for (auto& x : r) x = Rational(g.uniform(-5, 5), g.uniform(1, 3));
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols, Rational(0)));
  for (auto& r : out)
    for (const auto& b : basis) {
      const Rational c(g.uniform(-4, 4));
      for (int j = 0; j < cols; ++j) r[j] += c * b[j];
    }
  return out;
}

}  // namespace

TEST(IntegerRank, AgreesWithModularOracle) {
  for (int trial = 0; trial < 20; ++trial) {
    const int cols = 3 + trial % 6, rank = 1 + trial % cols, rows = cols + 2;
    const auto m = random_matrix(100 + trial, rows, rank, cols);
    SampleMatrix M;
    M.columns.resize(cols, "x");
    M.rows = m;
    M.nsamples = rows;
    const auto rep = exact_rank(M);
    EXPECT_EQ(rep.rank, oracle::rank_mod_p(m, cols)) << trial;
    EXPECT_EQ(rep.nullspace.size(), cols - rep.rank);
    for (const auto& v : rep.nullspace) {
      const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      ASSERT_NE(lead, v.end());
      EXPECT_GT(*lead, 0);
      Integer g = 0;
      for (const auto& x : v) g = gcd(g, x);
      EXPECT_EQ(g, 1);
      for (const auto& row : m) {
        Rational acc(0);
        for (int j = 0; j < cols; ++j) acc += row[j] * Rational(v[j]);
        EXPECT_EQ(acc, 0);
      }
    }
  }
}

TEST(IntegerRank, Small) {
  const auto rep = integer_rank({{Integer(2), Integer(4)}, {Integer(1), Integer(2)}}, 2);
  EXPECT_EQ(rep.rank, 1u);
  ASSERT_EQ(rep.nullspace.size(), 1u);
  EXPECT_EQ(rep.nullspace[0], (std::vector<Integer>{2, -1}));
  EXPECT_EQ(integer_rank({}, 3).rank, 0u);
  EXPECT_EQ(integer_rank({}, 3).nullspace.size(), 3u);
}

TEST(InSpan, Basic) {
  const std::vector<std::vector<Integer>> b = {{1, 0, 1}, {0, 1, 1}};
  EXPECT_TRUE(in_span(b, {2, 3, 5}));
  EXPECT_FALSE(in_span(b, {1, 1, 1}));
}

TEST(SampleMatrix, Shapes) {
  const auto q = build_sample_matrix(find_catalog("quartic_scalars"), 52, 1);
  EXPECT_EQ(q.rows.size(), 52u);
  EXPECT_EQ(q.columns.size(), 26u);
  const auto c = build_sample_matrix(find_catalog("cubic_rank2"), 8, 1);
  EXPECT_EQ(c.rows.size(), 128u);
  EXPECT_EQ(c.columns.size(), 16u);
  EXPECT_FALSE(c.warnings.empty());
}

TEST(SampleMatrix, EinsteinCatalogRejectsGeneralSamples) {
  EXPECT_THROW(build_sample_matrix(find_catalog("einstein_pseudo_rank4"), random_samples({1, 9, Domain::general}, 2)),
               PreconditionError);
}

TEST(Rank, ScalarCatalogs) {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"quadratic_basis", 3}, {"cubic_scalars", 6}, {"quartic_scalars", 13}, {"quartic_basis", 13}};
  for (const auto& [name, r] : expected) {
    const auto& cat = find_catalog(name);
    const auto M = build_sample_matrix(cat, default_samples(cat), 3);
    const auto rep = exact_rank(M);
    EXPECT_EQ(rep.rank, r) << name;
    EXPECT_EQ(rep.rank, oracle::rank_mod_p(M.rows, cat.size())) << name;
    EXPECT_TRUE(rep.stable()) << name;
  }
}

TEST(Rank, FewSamplesWarn) {
  const auto rep = exact_rank(build_sample_matrix(find_catalog("cubic_scalars"), 2, 3));
  EXPECT_FALSE(rep.warnings.empty());
  EXPECT_FALSE(rep.stable());
}

TEST(Rank, MatrixAndTensorPathsAgree) {
  const auto& cat = find_catalog("quartic_scalars");
  const auto t = exact_rank(build_sample_matrix(cat, 30, 4, 9, EvalPath::tensor));
  const auto m = exact_rank(build_sample_matrix(cat, 30, 4, 9, EvalPath::matrix));
  EXPECT_EQ(t.rank, m.rank);
  EXPECT_EQ(t.nullspace, m.nullspace);
}

TEST(Discover, QuarticScalarsSpanTheKnownRelations) {
  const auto& cat = find_catalog("quartic_scalars");
  const auto rep = discover_syzygies(cat, default_samples(cat), 5, 9, 8);
  EXPECT_EQ(rep.confirmed.size(), 13u);
  EXPECT_TRUE(rep.rejected.empty());
  std::vector<std::vector<Integer>> basis;
  for (const auto& s : rep.confirmed) basis.push_back(s.coefficients);
  for (const char* name : {"quartic_a", "quartic_b", "quartic_c", "quartic_d", "quartic_e", "quartic_f", "quartic_g",
                           "quartic_h", "quartic_i", "quartic_j", "quartic_k", "quartic_l", "harvey_15", "harvey_17",
                           "harvey_19", "reduced_19", "note_added_P_6S_3X"}) {
    const auto v = over_catalog(find_relation(name), cat);
    ASSERT_TRUE(v.has_value()) << name;
    EXPECT_TRUE(in_span(basis, *v)) << name;
  }
}

TEST(Discover, QuarticBasisNullVectorIsExp19) {
  const auto& cat = find_catalog("quartic_basis");
  const auto rep = discover_syzygies(cat, default_samples(cat), 6, 9, 8);
  ASSERT_EQ(rep.confirmed.size(), 1u);
  const auto v = over_catalog(find_relation("exp_19"), cat);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(in_span({rep.confirmed[0].coefficients}, *v));
}

TEST(Discover, CubicRank2SpansTheSyzygies) {
  const auto& cat = find_catalog("cubic_rank2");
  const auto rep = discover_syzygies(cat, default_samples(cat), 7, 9, 4);
  std::vector<std::vector<Integer>> basis;
  for (const auto& s : rep.confirmed) basis.push_back(s.coefficients);
  EXPECT_EQ(basis.size(), cat.size() - rep.rank.rank);
  for (const char* name : {"c_syzygy_1", "c_syzygy_2", "c_syzygy_eliminated_1", "c_syzygy_eliminated_2"}) {
    const auto v = over_catalog(find_relation(name), cat);
    ASSERT_TRUE(v.has_value()) << name;
    EXPECT_TRUE(in_span(basis, *v)) << name;
  }
  const auto bad = over_catalog(find_relation("c_syzygy_1_as_printed"), cat);
  ASSERT_TRUE(bad.has_value());
  EXPECT_FALSE(in_span(basis, *bad));
}

TEST(Discover, RenderCombination) {
  EXPECT_EQ(render_combination({1, -2, 0, 3}, {"A", "B", "C", "D"}), "A - 2*B + 3*D");
  EXPECT_EQ(render_combination({-1, 0}, {"A", "B"}), "-A");
  EXPECT_EQ(render_combination({0, 0}, {"A", "B"}), "0");
}
