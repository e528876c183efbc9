#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riemann/decomp.hpp"
#include "riemann/monomial.hpp"  // ParseError
#include "riemann/scalar.hpp"

namespace riemann {

/// Trace polynomial in the blocks of an FBlocks value:
///
///   expr   := term (('+' | '-') term)*          leading sign allowed
///   term   := factor (('*' factor) | ('/' INT))*
///   factor := atom ('^' INT)?
///   atom   := INT | R | Ap | Am | B | Bt | I | tr(expr) | det(expr) | (expr)
///
/// Ap, Am, B are the blocks, Bt = B^T, I the 3x3 identity, and R the scalar
/// curvature 4 (tr Ap + tr Am). Values are rationals or 3x3 matrices; mixing
/// them in a sum is a parse error.
class MatrixExpr {
 public:
  enum class Kind { number, curvature, leaf, sum, product, power, trace, det };
  enum class Leaf { a_plus, a_minus, b, b_t, identity };

  Kind kind() const { return kind_; }
  bool is_matrix() const { return matrix_; }

  /// Canonical text; parse_matrix_expr(str()) evaluates identically.
  std::string str() const;
  /// Like str() but with sums and commuting scalar factors sorted, so that
  /// expressions equal up to reordering share a key.
  std::string key() const;

  /// Swaps Ap <-> Am and B <-> Bt: value(parity_image(e), F) == value(e, parity(F)).
  MatrixExpr parity_image() const;

  /// Every expression obtained by flipping the sign of one member of a
  /// parity pair, i.e. two terms t1, t2 of one sum with equal-magnitude
  /// coefficients and parity_image(t1) == t2 up to reordering. One result
  /// per such site, in pre-order. Applying the same flip twice restores e.
  std::vector<MatrixExpr> pseudo_variants() const;
  /// First entry of pseudo_variants(), if any.
  std::optional<MatrixExpr> pseudo_variant() const;

  /// Checks that every matrix product chains compatible SU(2)xSU(2) sectors
  /// (Ap: ++, Am: --, B: +-, Bt: -+) and every trace closes on one sector.
  /// A scalar failing the term-wise check is accepted when its value is
  /// exactly unchanged under random rational rotations of the two sectors.
  /// On failure, `why` names the offending subterm.
  bool sector_consistent(std::string* why = nullptr) const;

  Rational evaluate(const FBlocks<Rational>& F) const;
  Mat3<Rational> evaluate_matrix(const FBlocks<Rational>& F) const;

  // Node internals, exposed for traversal.
  const std::vector<MatrixExpr>& children() const { return children_; }
  const std::vector<Rational>& coefficients() const { return coefs_; }

 private:
  friend class MatrixExprParser;

  struct Value;
  std::string render(bool canonical) const;
  Value eval(const FBlocks<Rational>& F) const;
  void collect_variants(std::vector<MatrixExpr>& out) const;

  Kind kind_ = Kind::number;
  bool matrix_ = false;
  Leaf leaf_ = Leaf::identity;
  Rational number_{0};
  int exponent_ = 1;
  std::vector<MatrixExpr> children_;
  std::vector<Rational> coefs_;  // sum only: coefficient of each child
};

MatrixExpr parse_matrix_expr(std::string_view text);

}  // namespace riemann
