#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riemann/scalar.hpp"
#include "riemann/tensor.hpp"

namespace riemann {

/// Parse failure with the 0-based character offset of the problem.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class FactorKind { riemann, ricci, scalar, epsilon, delta, weyl };

struct Factor {
  FactorKind kind;
  std::vector<std::string> labels;
};

/// Rational coefficient times a product of index-labeled factors:
///   R[a,b,c,d]  Riemann      Rc[a,b]  Ricci     Sc     scalar curvature
///   W[a,b,c,d]  Weyl         eps[..]  Levi-Civita  delta[a,b]
/// A label occurring twice is summed over; once, it is free.
///
///   "R[a,b,c,d]*R[a,b,c,d]"   "-1/4*Sc^2*Rc[a,b]"   "eps[a,b,c,d]*R[a,b,c,d]"
class MonomialExpr {
 public:
  MonomialExpr() = default;
  MonomialExpr(Rational coefficient, std::vector<Factor> factors);

  const Rational& coefficient() const { return coef_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Free labels in order of first appearance.
  const std::vector<std::string>& free_labels() const { return free_; }
  std::size_t rank() const { return free_.size(); }
  bool uses(FactorKind kind) const;

  MonomialExpr scaled(const Rational& s) const;
  /// Replaces every occurrence of label `from` with `to` (e.g. to trace a
  /// rank-2 expression, rename b to a). Throws InputError if the result
  /// would use a label more than twice.
  MonomialExpr renamed(const std::string& from, const std::string& to) const;

  /// Canonical text, parseable by parse_monomial.
  std::string str() const;

 private:
  Rational coef_{1};
  std::vector<Factor> factors_;
  std::vector<std::string> free_;
};

/// Throws ParseError on syntax errors, unknown factors, wrong arity, or a
/// label used three or more times.
MonomialExpr parse_monomial(std::string_view text);

/// Components of an evaluated expression, row-major over `labels`
/// (each index 0..3). Rank 0 holds one value.
template <class S>
struct IndexedValue {
  std::vector<std::string> labels;
  std::vector<S> values;

  std::size_t rank() const { return labels.size(); }
  const S& scalar() const { return values.at(0); }
  /// 0-based component access.
  const S& at(std::initializer_list<int> idx) const {
    std::size_t flat = 0;
    for (int i : idx) flat = flat * 4 + static_cast<std::size_t>(i);
    return values.at(flat);
  }
  bool is_zero() const {
    for (const S& v : values)
      if (v != S(0)) return false;
    return true;
  }
};

/// Evaluates monomials against one curvature tensor, caching its Ricci
/// tensor, scalar curvature, and Weyl tensor. Contractions are performed
/// pairwise (cheapest pair first) over dense labeled tensors, using checked
/// int64 arithmetic when every input component is integral and exact
/// rationals otherwise or on overflow.
class ContractionEvaluator {
 public:
  explicit ContractionEvaluator(const Rank4<Rational>& riemann);
  ~ContractionEvaluator();
  ContractionEvaluator(ContractionEvaluator&&) noexcept;
  ContractionEvaluator& operator=(ContractionEvaluator&&) noexcept;

  /// `order` fixes the output index order; it must be a permutation of the
  /// expression's free labels. Empty means order of first appearance.
  IndexedValue<Rational> evaluate(const MonomialExpr& expr,
                                  const std::vector<std::string>& order = {}) const;

  const Rank4<Rational>& riemann() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

IndexedValue<Rational> evaluate_monomial(const MonomialExpr& expr, const Rank4<Rational>& T,
                                         const std::vector<std::string>& order = {});

}  // namespace riemann
