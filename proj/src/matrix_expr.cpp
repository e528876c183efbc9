#include "riemann/matrix_expr.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "riemann/gen.hpp"

namespace riemann {

struct MatrixExpr::Value {
  bool is_matrix = false;
  Rational s{0};
  Mat3<Rational> m;
};

class MatrixExprParser {
 public:
  explicit MatrixExprParser(std::string_view s) : s_(s) {}

  MatrixExpr parse() {
    MatrixExpr e = expr();
    skip();
    if (!at_end())
      throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return e;
  }

  static MatrixExpr number(Rational v) {
    MatrixExpr e;
    e.kind_ = MatrixExpr::Kind::number;
    e.number_ = std::move(v);
    return e;
  }

  static MatrixExpr leaf(MatrixExpr::Leaf l) {
    MatrixExpr e;
    e.kind_ = MatrixExpr::Kind::leaf;
    e.leaf_ = l;
    e.matrix_ = true;
    return e;
  }

 private:
  using Kind = MatrixExpr::Kind;

  MatrixExpr expr() {
    MatrixExpr sum;
    sum.kind_ = Kind::sum;
    skip();
    Rational sign(1);
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    while (true) {
      const std::size_t start = pos_;
      auto [c, node] = term();
      if (!sum.children_.empty() && node.matrix_ != sum.matrix_)
        throw ParseError("cannot add a scalar and a matrix", start);
      sum.matrix_ = node.matrix_;
      sum.coefs_.push_back(sign * c);
      sum.children_.push_back(std::move(node));
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        continue;
      }
      break;
    }
    if (sum.children_.size() == 1 && sum.coefs_[0] == 1) return std::move(sum.children_[0]);
    return sum;
  }

  // Returns (numeric coefficient, product of the remaining factors).
  std::pair<Rational, MatrixExpr> term() {
    Rational c(1);
    std::vector<MatrixExpr> factors;
    while (true) {
      MatrixExpr f = factor();
      if (f.kind_ == Kind::number) {
        c *= f.number_;
      } else if (f.kind_ == Kind::sum && f.children_.size() == 1) {
        // "(3*X)" used as a factor: pull the coefficient out.
        c *= f.coefs_[0];
        factors.push_back(std::move(f.children_[0]));
      } else {
        factors.push_back(std::move(f));
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const Rational d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        c /= d;
        skip();
        if (peek() == '*') {
          ++pos_;
          continue;
        }
        if (peek() == '/') continue;
      }
      break;
    }
    if (factors.empty()) return {c, number(1)};
    if (factors.size() == 1) return {c, std::move(factors[0])};
    MatrixExpr p;
    p.kind_ = Kind::product;
    p.matrix_ = std::any_of(factors.begin(), factors.end(), [](const MatrixExpr& f) { return f.matrix_; });
    p.children_ = std::move(factors);
    return {c, std::move(p)};
  }

  MatrixExpr factor() {
    MatrixExpr base = atom();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    const Rational n = integer();
    if (n < 1 || n > 64) throw ParseError("exponent must be in 1..64", at);
    const int k = static_cast<int>(numerator(n).convert_to<long>());
    if (base.kind_ == Kind::number) {
      Rational v(1);
      for (int i = 0; i < k; ++i) v *= base.number_;
      return number(v);
    }
    MatrixExpr p;
    p.kind_ = Kind::power;
    p.matrix_ = base.matrix_;
    p.exponent_ = k;
    p.children_.push_back(std::move(base));
    return p;
  }

  MatrixExpr atom() {
    skip();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) return number(integer());
    if (peek() == '(') {
      ++pos_;
      MatrixExpr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError(at_end() ? "expression ended unexpectedly" : "expected an operand", pos_);
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek()))) name += get();
    if (name == "R") {
      MatrixExpr e;
      e.kind_ = Kind::curvature;
      return e;
    }
    if (name == "Ap") return leaf(MatrixExpr::Leaf::a_plus);
    if (name == "Am") return leaf(MatrixExpr::Leaf::a_minus);
    if (name == "B") return leaf(MatrixExpr::Leaf::b);
    if (name == "Bt") return leaf(MatrixExpr::Leaf::b_t);
    if (name == "I") return leaf(MatrixExpr::Leaf::identity);
    if (name == "tr" || name == "det") {
      expect('(');
      const std::size_t arg_at = pos_;
      MatrixExpr arg = expr();
      expect(')');
      if (!arg.matrix_) throw ParseError(name + "() needs a matrix argument", arg_at);
      MatrixExpr e;
      e.kind_ = name == "tr" ? Kind::trace : Kind::det;
      e.children_.push_back(std::move(arg));
      return e;
    }
    throw ParseError("unknown symbol '" + name + "'", start);
  }

  Rational integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return parse_rational(s_.substr(start, pos_ - start));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "', found '" + peek() + "'", pos_);
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

MatrixExpr parse_matrix_expr(std::string_view text) { return MatrixExprParser(text).parse(); }

namespace {

const char* leaf_name(MatrixExpr::Leaf l) {
  switch (l) {
    case MatrixExpr::Leaf::a_plus: return "Ap";
    case MatrixExpr::Leaf::a_minus: return "Am";
    case MatrixExpr::Leaf::b: return "B";
    case MatrixExpr::Leaf::b_t: return "Bt";
    case MatrixExpr::Leaf::identity: return "I";
  }
  return "?";
}

}  // namespace

std::string MatrixExpr::render(bool canonical) const {
  switch (kind_) {
    case Kind::number: return to_string(number_);
    case Kind::curvature: return "R";
    case Kind::leaf: return leaf_name(leaf_);
    case Kind::sum: {
      std::vector<std::pair<std::string, Rational>> terms;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        std::string body = children_[k].render(canonical);
        if (children_[k].kind_ == Kind::sum) body = "(" + body + ")";
        terms.emplace_back(std::move(body), coefs_[k]);
      }
      if (canonical)
        std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
          return x.first != y.first ? x.first < y.first : x.second < y.second;
        });
      std::ostringstream os;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [body, c] = terms[k];
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (k == 0) {
          if (c < 0) os << "-";
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        if (body == "1") {
          os << to_string(mag);
        } else {
          if (mag != 1) os << to_string(mag) << "*";
          os << body;
        }
      }
      return os.str();
    }
    case Kind::product: {
      std::vector<std::string> scalars, mats;
      for (const auto& f : children_) {
        std::string s = f.render(canonical);
        if (f.kind_ == Kind::sum) s = "(" + s + ")";
        (canonical && !f.matrix_ ? scalars : mats).push_back(std::move(s));
      }
      std::sort(scalars.begin(), scalars.end());
      scalars.insert(scalars.end(), mats.begin(), mats.end());
      std::string out;
      for (std::size_t k = 0; k < scalars.size(); ++k) out += (k ? "*" : "") + scalars[k];
      return out;
    }
    case Kind::power: {
      const MatrixExpr& b = children_[0];
      std::string s = b.render(canonical);
      if (b.kind_ == Kind::sum || b.kind_ == Kind::product || b.kind_ == Kind::power) s = "(" + s + ")";
      return s + "^" + std::to_string(exponent_);
    }
    case Kind::trace: {
      const MatrixExpr& a = children_[0];
      if (!canonical || a.kind_ != Kind::product) return "tr(" + a.render(canonical) + ")";
      // Trace is cyclic: use the least rotation of the matrix factors.
      std::vector<std::string> scalars, mats;
      for (const auto& f : a.children_) {
        std::string s = f.render(canonical);
        if (f.kind_ == Kind::sum) s = "(" + s + ")";
        (f.matrix_ ? mats : scalars).push_back(std::move(s));
      }
      std::sort(scalars.begin(), scalars.end());
      std::string best;
      for (std::size_t r = 0; r < mats.size(); ++r) {
        std::string cand;
        for (std::size_t k = 0; k < mats.size(); ++k) cand += (k ? "*" : "") + mats[(r + k) % mats.size()];
        if (r == 0 || cand < best) best = cand;
      }
      std::string out;
      for (const auto& s : scalars) out += s + "*";
      return "tr(" + out + best + ")";
    }
    case Kind::det: return "det(" + children_[0].render(canonical) + ")";
  }
  return "";
}

std::string MatrixExpr::str() const { return render(false); }
std::string MatrixExpr::key() const { return render(true); }

MatrixExpr MatrixExpr::parity_image() const {
  MatrixExpr e = *this;
  if (kind_ == Kind::leaf) {
    switch (leaf_) {
      case Leaf::a_plus: e.leaf_ = Leaf::a_minus; break;
      case Leaf::a_minus: e.leaf_ = Leaf::a_plus; break;
      case Leaf::b: e.leaf_ = Leaf::b_t; break;
      case Leaf::b_t: e.leaf_ = Leaf::b; break;
      case Leaf::identity: break;
    }
  }
  for (auto& c : e.children_) c = c.parity_image();
  return e;
}

void MatrixExpr::collect_variants(std::vector<MatrixExpr>& out) const {
  if (kind_ == Kind::sum) {
    std::vector<std::string> keys, parity_keys;
    for (const auto& c : children_) {
      keys.push_back(c.key());
      parity_keys.push_back(c.parity_image().key());
    }
    for (std::size_t i = 0; i < children_.size(); ++i)
      for (std::size_t j = i + 1; j < children_.size(); ++j) {
        const bool same_mag = coefs_[i] == coefs_[j] || coefs_[i] == -coefs_[j];
        if (same_mag && keys[i] != keys[j] && parity_keys[i] == keys[j]) {
          MatrixExpr v = *this;
          v.coefs_[j] = -v.coefs_[j];
          out.push_back(std::move(v));
        }
      }
  }
  for (std::size_t k = 0; k < children_.size(); ++k) {
    std::vector<MatrixExpr> sub;
    children_[k].collect_variants(sub);
    for (auto& s : sub) {
      MatrixExpr v = *this;
      v.children_[k] = std::move(s);
      out.push_back(std::move(v));
    }
  }
}

std::vector<MatrixExpr> MatrixExpr::pseudo_variants() const {
  std::vector<MatrixExpr> all, unique;
  collect_variants(all);
  std::vector<std::string> seen;
  for (auto& v : all) {
    std::string k = v.key();
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
    seen.push_back(std::move(k));
    unique.push_back(std::move(v));
  }
  return unique;
}

std::optional<MatrixExpr> MatrixExpr::pseudo_variant() const {
  auto v = pseudo_variants();
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

namespace {

// Sector of a row or column: '+', '-', or '*' (unconstrained, e.g. identity).
struct Sectors {
  char row = '*', col = '*';
};

bool unify(char& into, char other) {
  if (into == '*') {
    into = other;
    return true;
  }
  return other == '*' || other == into;
}

/// Cayley transform (I - K)(I + K)^-1 of a random integer skew matrix K.
Mat3<Rational> rational_rotation(std::uint64_t seed) {
  SplitMix64 g(seed);
  Mat3<Rational> K = Mat3<Rational>::Zero();
  K(0, 1) = g.uniform(-4, 4);
  K(0, 2) = g.uniform(-4, 4);
  K(1, 2) = g.uniform(-4, 4);
  K(1, 0) = -K(0, 1);
  K(2, 0) = -K(0, 2);
  K(2, 1) = -K(1, 2);
  const Mat3<Rational> I = Mat3<Rational>::Identity();
  return (I - K) * (I + K).inverse();
}

}  // namespace

bool MatrixExpr::sector_consistent(std::string* why) const {
  std::string failure;
  // Returns sectors of a matrix-valued node; for scalar nodes checks children.
  std::function<Sectors(const MatrixExpr&)> walk = [&](const MatrixExpr& e) -> Sectors {
    if (!failure.empty()) return {};
    switch (e.kind_) {
      case Kind::number:
      case Kind::curvature: return {};
      case Kind::leaf:
        switch (e.leaf_) {
          case Leaf::a_plus: return {'+', '+'};
          case Leaf::a_minus: return {'-', '-'};
          case Leaf::b: return {'+', '-'};
          case Leaf::b_t: return {'-', '+'};
          case Leaf::identity: return {};
        }
        return {};
      case Kind::sum: {
        Sectors s;
        for (const auto& c : e.children_) {
          const Sectors t = walk(c);
          if (e.matrix_ && (!unify(s.row, t.row) || !unify(s.col, t.col)))
            failure = "sum mixes sectors: " + e.str();
        }
        return s;
      }
      case Kind::product: {
        bool first = true;
        Sectors s;
        for (const auto& c : e.children_) {
          const Sectors t = walk(c);
          if (!c.matrix_) continue;
          if (first) {
            s = t;
            first = false;
            continue;
          }
          char link = s.col;
          if (!unify(link, t.row)) failure = "product chains mismatched sectors: " + e.str();
          if (s.row == '*' && s.col == '*') s.row = t.row;  // everything so far was I
          s.col = (t.row == '*' && t.col == '*') ? link : t.col;
        }
        return s;
      }
      case Kind::power: {
        Sectors s = walk(e.children_[0]);
        if (e.matrix_ && e.exponent_ > 1) {
          char r = s.row;
          if (!unify(r, s.col)) failure = "power of an off-diagonal block: " + e.str();
        }
        return s;
      }
      case Kind::trace: {
        Sectors s = walk(e.children_[0]);
        char r = s.row;
        if (!unify(r, s.col)) failure = "trace of an off-diagonal block: " + e.str();
        return {};
      }
      case Kind::det: walk(e.children_[0]); return {};
    }
    return {};
  };
  walk(*this);
  if (failure.empty() || matrix_) {
    if (why) *why = failure;
    return failure.empty();
  }
  // Combinations such as Newton's expansion of det(B) are invariant although
  // their terms are not; decide those by exact rotation of random samples.
  for (std::uint64_t trial = 0; trial < 4; ++trial) {
    const FBlocks<Rational> F = random_fblocks({0x5ec7 + trial, 5, Domain::general});
    const Mat3<Rational> O1 = rational_rotation(0x5ec7 + 2 * trial), O2 = rational_rotation(0x5ec8 + 2 * trial);
    const FBlocks<Rational> G(O1 * F.a_plus() * O1.transpose(), O2 * F.a_minus() * O2.transpose(),
                              O1 * F.b() * O2.transpose());
    if (evaluate(F) != evaluate(G)) {
      if (why) *why = failure + "; value changes under sector rotations";
      return false;
    }
  }
  if (why) why->clear();
  return true;
}

MatrixExpr::Value MatrixExpr::eval(const FBlocks<Rational>& F) const {
  Value v;
  v.is_matrix = matrix_;
  switch (kind_) {
    case Kind::number: v.s = number_; break;
    case Kind::curvature: v.s = F.scalar_curvature(); break;
    case Kind::leaf:
      switch (leaf_) {
        case Leaf::a_plus: v.m = F.a_plus(); break;
        case Leaf::a_minus: v.m = F.a_minus(); break;
        case Leaf::b: v.m = F.b(); break;
        case Leaf::b_t: v.m = F.b().transpose(); break;
        case Leaf::identity: v.m = Mat3<Rational>::Identity(); break;
      }
      break;
    case Kind::sum:
      if (matrix_) v.m = Mat3<Rational>::Zero();
      for (std::size_t k = 0; k < children_.size(); ++k) {
        const Value c = children_[k].eval(F);
        if (matrix_) v.m += coefs_[k] * c.m;
        else v.s += coefs_[k] * c.s;
      }
      break;
    case Kind::product: {
      Rational scale(1);
      bool have_matrix = false;
      for (const auto& ch : children_) {
        const Value c = ch.eval(F);
        if (!c.is_matrix) {
          scale *= c.s;
        } else if (!have_matrix) {
          v.m = c.m;
          have_matrix = true;
        } else {
          v.m = (v.m * c.m).eval();
        }
      }
      if (have_matrix) v.m *= scale;
      else v.s = scale;
      break;
    }
    case Kind::power: {
      const Value b = children_[0].eval(F);
      if (matrix_) {
        v.m = b.m;
        for (int k = 1; k < exponent_; ++k) v.m = (v.m * b.m).eval();
      } else {
        v.s = b.s;
        for (int k = 1; k < exponent_; ++k) v.s *= b.s;
      }
      break;
    }
    case Kind::trace: v.s = children_[0].eval(F).m.trace(); break;
    case Kind::det: {
      const Mat3<Rational> m = children_[0].eval(F).m;
      v.s = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      break;
    }
  }
  return v;
}

Rational MatrixExpr::evaluate(const FBlocks<Rational>& F) const {
  if (matrix_) throw PreconditionError("expression is matrix-valued: " + str());
  return eval(F).s;
}

Mat3<Rational> MatrixExpr::evaluate_matrix(const FBlocks<Rational>& F) const {
  if (!matrix_) throw PreconditionError("expression is scalar-valued: " + str());
  return eval(F).m;
}

}  // namespace riemann
