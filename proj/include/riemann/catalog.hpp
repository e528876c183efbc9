#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riemann/decomp.hpp"
#include "riemann/gen.hpp"
#include "riemann/matrix_expr.hpp"
#include "riemann/monomial.hpp"

namespace riemann {

/// One labeled invariant. At least one of the two forms is present; when
/// both are, they agree on every curvature tensor.
struct CatalogEntry {
  std::string label;
  std::optional<MonomialExpr> monomial;  // index form, evaluated on the tensor
  std::optional<MatrixExpr> matrix;      // block form, evaluated on FBlocks
};

struct Catalog {
  std::string name;
  std::string description;
  Domain domain = Domain::general;
  /// Free index labels shared by every monomial entry; empty for scalars.
  std::vector<std::string> free;
  std::vector<CatalogEntry> entries;
  /// Set for catalogs generated from the pseudo variants of another one.
  std::string derived_from;

  std::size_t size() const { return entries.size(); }
  /// Number of values each entry contributes per sample (4^rank).
  std::size_t components() const;
  std::vector<std::string> labels() const;
  const CatalogEntry* find(std::string_view label) const;
};

/// Parses the catalog table format (see data/catalogs.json). Definitions
/// `{name}` are substituted textually into matrix expressions, and catalogs
/// with "derive_pseudo" are filled with the pseudo variants of their source.
/// Throws InputError naming the offending catalog and entry.
std::vector<Catalog> load_catalogs(std::string_view json_text);

/// The shipped catalogs, parsed once.
const std::vector<Catalog>& catalogs();
/// Throws InputError for an unknown name.
const Catalog& find_catalog(std::string_view name);

/// One curvature sample: the blocks, the reconstructed tensor, and a
/// contraction evaluator with its derived tensors cached.
class Sample {
 public:
  explicit Sample(FBlocks<Rational> blocks);

  const FBlocks<Rational>& blocks() const { return blocks_; }
  const Rank4<Rational>& tensor() const { return evaluator_.riemann(); }
  const ContractionEvaluator& evaluator() const { return evaluator_; }

 private:
  FBlocks<Rational> blocks_;
  ContractionEvaluator evaluator_;
};

/// tensor: index form only; matrix: block form only; automatic: index form
/// when present, block form otherwise.
enum class EvalPath { automatic, tensor, matrix };

/// Value of an entry at a sample, with components ordered by `order`
/// (default: the entry's free labels). Throws PreconditionError when the
/// requested form is missing.
IndexedValue<Rational> evaluate_entry(const CatalogEntry& entry, const Sample& sample,
                                      EvalPath path = EvalPath::automatic,
                                      const std::vector<std::string>& order = {});

/// Replaces each `{name}` in `text` by the parenthesized definition,
/// recursively. Throws InputError on unknown or cyclic names.
std::string expand_definitions(std::string_view text,
                               const std::map<std::string, std::string, std::less<>>& defs);

/// Pseudo variants of one matrix expression, labeled "<label>~" or, when
/// an entry has several, "<label>~1", "<label>~2", ...
std::vector<CatalogEntry> pseudo_entries(const CatalogEntry& entry);

}  // namespace riemann
