#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riemann/catalog.hpp"

namespace riemann {

/// Values of every catalog entry on a list of samples; one row per sample
/// and tensor component.
struct SampleMatrix {
  std::string catalog;
  std::vector<std::string> columns;
  std::vector<std::vector<Rational>> rows;
  std::size_t rows_per_sample = 1;
  // Provenance.
  std::uint64_t seed = 0;
  int bound = 9;
  Domain domain = Domain::general;
  std::size_t nsamples = 0;
  std::vector<std::string> warnings;
};

/// 2 |catalog| + 8.
std::size_t default_samples(const Catalog& catalog);

/// Draws samples k = first_stream .. first_stream + nsamples - 1 from
/// (seed, bound, catalog.domain) and evaluates the catalog on them.
SampleMatrix build_sample_matrix(const Catalog& catalog, std::size_t nsamples, std::uint64_t seed,
                                 int bound = 9, EvalPath path = EvalPath::automatic,
                                 std::uint64_t first_stream = 0);
/// Same on caller-supplied samples (e.g. imported from JSON).
SampleMatrix build_sample_matrix(const Catalog& catalog, const std::vector<FBlocks<Rational>>& samples,
                                 EvalPath path = EvalPath::automatic);

struct RankReport {
  std::vector<std::string> columns;
  std::size_t rank = 0;
  std::vector<std::string> pivot_labels;
  /// Primitive integer vectors, first nonzero entry positive; together a
  /// basis of the null space.
  std::vector<std::vector<Integer>> nullspace;
  /// Rank of the rows from the first half of the samples; equal to `rank`
  /// when the sample count was comfortably large.
  std::size_t half_rank = 0;
  bool stable() const { return half_rank == rank; }
  std::vector<std::string> warnings;
};

/// Exact rank of a rational matrix by fraction-free Gauss-Jordan elimination
/// (Bareiss-Montante) on the integer-scaled rows.
RankReport exact_rank(const SampleMatrix& M);

/// Rank and null space of an integer matrix given as rows.
RankReport integer_rank(std::vector<std::vector<Integer>> rows, std::size_t ncols);

/// Sum of coefficient times entry, rendered as text.
std::string render_combination(const std::vector<Integer>& coefs, const std::vector<std::string>& labels);

struct Syzygy {
  std::vector<Integer> coefficients;  // over the catalog's entries
  bool confirmed = false;
  std::string str;
};

struct DiscoveryReport {
  RankReport rank;
  std::size_t confirm_samples = 0;
  std::vector<Syzygy> confirmed;
  std::vector<Syzygy> rejected;
};

/// Null vectors of the sample matrix, each re-checked on `confirm_samples`
/// fresh samples (streams following the ones used for the rank). Only
/// vectors annihilating every fresh row are reported as confirmed.
DiscoveryReport discover_syzygies(const Catalog& catalog, std::size_t nsamples, std::uint64_t seed,
                                  int bound, std::size_t confirm_samples,
                                  EvalPath path = EvalPath::automatic);

/// True when `v` is a rational combination of `basis` (exact).
bool in_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& v);

}  // namespace riemann
