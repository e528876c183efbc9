#include "riemann/ranklab.hpp"

#include <algorithm>
#include <sstream>

namespace riemann {

std::size_t default_samples(const Catalog& catalog) { return 2 * catalog.size() + 8; }

SampleMatrix build_sample_matrix(const Catalog& catalog, const std::vector<FBlocks<Rational>>& samples,
                                 EvalPath path) {
  SampleMatrix M;
  M.catalog = catalog.name;
  M.columns = catalog.labels();
  M.domain = catalog.domain;
  M.nsamples = samples.size();
  M.rows_per_sample = catalog.components();
  if (samples.size() < 2 * catalog.size())
    M.warnings.push_back("only " + std::to_string(samples.size()) + " samples for " +
                         std::to_string(catalog.size()) + " entries; at least twice as many are recommended");
  for (const auto& F : samples) {
    if (catalog.domain == Domain::einstein && !F.is_einstein())
      throw PreconditionError("catalog '" + catalog.name + "' needs Einstein samples");
    const Sample s(F);
    std::vector<std::vector<Rational>> block(M.rows_per_sample, std::vector<Rational>(catalog.size()));
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      const auto v = evaluate_entry(catalog.entries[j], s, path, catalog.free);
      for (std::size_t r = 0; r < M.rows_per_sample; ++r) block[r][j] = v.values[r];
    }
    for (auto& row : block) M.rows.push_back(std::move(row));
  }
  return M;
}

SampleMatrix build_sample_matrix(const Catalog& catalog, std::size_t nsamples, std::uint64_t seed, int bound,
                                 EvalPath path, std::uint64_t first_stream) {
  SampleMatrix M =
      build_sample_matrix(catalog, random_samples({seed, bound, catalog.domain}, nsamples, first_stream), path);
  M.seed = seed;
  M.bound = bound;
  return M;
}

namespace {

std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) l = lcm(l, denominator(q));
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(numerator(q) * (l / denominator(q)));
  return out;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : v) x /= g;
}

}  // namespace

RankReport integer_rank(std::vector<std::vector<Integer>> m, std::size_t ncols) {
  RankReport rep;
  // Bareiss-Montante: after each pivot step every processed pivot equals the
  // current leading minor `prev`, and all divisions are exact.
  Integer prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Integer piv = m[r][c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Integer f = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (j == c) continue;
        m[i][j] = (piv * m[i][j] - f * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  rep.rank = r;
  // Pivot row k reads prev * x_{pivot k} + sum_free m[k][f] x_f = 0.
  for (std::size_t f = 0; f < ncols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Integer> v(ncols, Integer(0));
    v[f] = prev;
    for (std::size_t k = 0; k < r; ++k) v[pivots[k]] = -m[k][f];
    make_primitive(v);
    rep.nullspace.push_back(std::move(v));
  }
  for (std::size_t c : pivots) rep.pivot_labels.push_back(std::to_string(c));
  rep.half_rank = r;
  return rep;
}

RankReport exact_rank(const SampleMatrix& M) {
  const std::size_t n = M.columns.size();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(M.rows.size());
  for (const auto& row : M.rows) rows.push_back(integer_row(row));
  const std::size_t half_rows = (M.nsamples / 2) * M.rows_per_sample;
  std::vector<std::vector<Integer>> head(rows.begin(), rows.begin() + std::min(half_rows, rows.size()));

  RankReport rep = integer_rank(std::move(rows), n);
  rep.columns = M.columns;
  for (auto& p : rep.pivot_labels) p = M.columns.at(std::stoul(p));
  rep.half_rank = integer_rank(std::move(head), n).rank;
  rep.warnings = M.warnings;
  if (!rep.stable())
    rep.warnings.push_back("rank from half of the samples (" + std::to_string(rep.half_rank) +
                           ") differs from the full rank; use more samples");
  return rep;
}

std::string render_combination(const std::vector<Integer>& coefs, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    if (coefs[i] == 0) continue;
    Integer c = coefs[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    if (c != 1) os << c << "*";
    os << labels[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

DiscoveryReport discover_syzygies(const Catalog& catalog, std::size_t nsamples, std::uint64_t seed, int bound,
                                  std::size_t confirm_samples, EvalPath path) {
  DiscoveryReport rep;
  rep.confirm_samples = confirm_samples;
  rep.rank = exact_rank(build_sample_matrix(catalog, nsamples, seed, bound, path));
  const SampleMatrix fresh = build_sample_matrix(catalog, confirm_samples, seed, bound, path, nsamples);
  for (const auto& v : rep.rank.nullspace) {
    Syzygy s{v, true, render_combination(v, catalog.labels()) + " = 0"};
    for (const auto& row : fresh.rows) {
      Rational acc(0);
      for (std::size_t j = 0; j < v.size(); ++j) acc += Rational(v[j]) * row[j];
      if (acc != 0) {
        s.confirmed = false;
        break;
      }
    }
    (s.confirmed ? rep.confirmed : rep.rejected).push_back(std::move(s));
  }
  return rep;
}

bool in_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& v) {
  const std::size_t n = v.size();
  const std::size_t r = integer_rank(basis, n).rank;
  auto all = basis;
  all.push_back(v);
  return integer_rank(std::move(all), n).rank == r;
}

}  // namespace riemann
