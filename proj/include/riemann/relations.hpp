#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riemann/catalog.hpp"

namespace riemann {

enum class RelationKind { scalar, rank2, rank4, pseudo };

std::string to_string(RelationKind kind);
std::string to_string(Domain domain);

/// coef * (matrix value) * (monomial value), with either factor optional,
/// or coef * (catalog entry value) when `ref` is set.
struct RelationTerm {
  Rational coef{1};
  std::optional<MonomialExpr> mono;
  std::optional<MatrixExpr> matrix;
  std::string ref;  // "catalog.label"

  std::string str() const;
};

/// A linear combination asserted to vanish identically on its domain.
struct Relation {
  std::string name;
  std::string anchor;
  Domain domain = Domain::general;
  RelationKind kind = RelationKind::scalar;
  int order = 0;  // polynomial degree in the curvature
  std::vector<std::string> free;
  std::vector<RelationTerm> terms;
  /// Shipped as a known-wrong form that must fail verification.
  bool known_bad = false;
};

/// A claim about relations themselves rather than about curvature values.
///   combination: target = sum coef_i * relation_i (modulo `modulo`)
///   trace_span:  tracing `traced` over `labels` spans the same space as
///                `span_of`, modulo `modulo`
struct MetaRelation {
  std::string name;
  std::string anchor;
  std::string check;
  std::string target;
  std::vector<std::pair<Rational, std::string>> combination;
  std::vector<std::string> traced;
  std::vector<std::string> labels;
  std::vector<std::string> span_of;
  std::vector<std::string> modulo;
};

struct RelationTable {
  std::vector<Relation> relations;
  std::vector<Relation> known_bad;
  std::vector<MetaRelation> meta;
};

/// Parses the relation table format (see data/relations.json). Catalog
/// references are resolved against `cats`.
RelationTable load_relations(std::string_view json_text, const std::vector<Catalog>& cats);

const RelationTable& relation_table();
/// Every shipped identity (known-bad forms excluded).
const std::vector<Relation>& relation_catalog();
/// Searches identities, then known-bad forms. Throws InputError.
const Relation& find_relation(std::string_view name);

/// Residual of a relation at one sample; components row-major over `labels`.
struct Residual {
  std::vector<std::string> labels;
  std::vector<Rational> values;
  bool is_zero = true;
};

/// Value of one term, components ordered by the relation's free labels.
IndexedValue<Rational> evaluate_term(const RelationTerm& term, const Relation& rel,
                                     const Sample& sample);

/// Throws PreconditionError when an Einstein relation meets a sample with B != 0.
Residual verify(const Relation& rel, const Sample& sample);
Residual verify(const Relation& rel, const FBlocks<Rational>& F);

struct RelationOutcome {
  std::string name;
  Domain domain = Domain::general;
  bool known_bad = false;
  std::size_t samples = 0;  // samples evaluated
  bool passed = true;       // every residual was zero
  std::optional<FBlocks<Rational>> counterexample;
  Residual residual;        // at the counterexample
  /// A known-bad form passes the report when it fails verification.
  bool as_expected() const { return passed != known_bad; }
};

struct MetaOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<RelationOutcome> relations;
  std::vector<MetaOutcome> meta;
  bool all_passed() const;
};

/// Relation subsets for the CLI: all, quadratic, cubic, quartic, quintic,
/// einstein, pseudo, known_bad.
bool in_set(const Relation& rel, std::string_view set);
std::vector<Relation> relations_in_set(std::string_view set);

/// Checks each relation on `count` general and `count` Einstein samples
/// (Einstein relations see only the latter), stopping a relation at its
/// first nonzero residual. Deterministic in (seed, count).
VerificationReport verify_all(std::uint64_t seed, std::size_t count,
                              const std::vector<Relation>& relations);
VerificationReport verify_all(std::uint64_t seed, std::size_t count);

/// Runs the meta checks. They are formal: every term is reduced to a class
/// of numerically proportional monomials, so a relation becomes a vector of
/// class coefficients, and the claims are checked by exact linear algebra.
std::vector<MetaOutcome> verify_meta(const RelationTable& table);

}  // namespace riemann
