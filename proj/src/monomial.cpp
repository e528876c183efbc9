#include "riemann/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "riemann/curvature.hpp"
#include "riemann/thooft.hpp"

namespace riemann {
namespace {

struct FactorSpec {
  const char* name;
  FactorKind kind;
  std::size_t arity;
};

constexpr FactorSpec kFactors[] = {
    {"R", FactorKind::riemann, 4}, {"Rc", FactorKind::ricci, 2}, {"Sc", FactorKind::scalar, 0},
    {"eps", FactorKind::epsilon, 4}, {"delta", FactorKind::delta, 2}, {"W", FactorKind::weyl, 4},
};

const FactorSpec& spec_of(FactorKind k) {
  for (const auto& s : kFactors)
    if (s.kind == k) return s;
  throw std::logic_error("unknown factor kind");
}

std::vector<std::string> compute_free(const std::vector<Factor>& factors) {
  std::vector<std::string> order;
  std::map<std::string, int> count;
  for (const auto& f : factors)
    for (const auto& l : f.labels)
      if (count[l]++ == 0) order.push_back(l);
  std::vector<std::string> free;
  for (const auto& l : order)
    if (count[l] == 1) free.push_back(l);
  return free;
}

void check_label_counts(const std::vector<Factor>& factors) {
  std::map<std::string, int> count;
  for (const auto& f : factors)
    for (const auto& l : f.labels)
      if (++count[l] > 2) throw InputError("label '" + l + "' occurs more than twice");
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MonomialExpr parse() {
    skip();
    Rational coef(1);
    bool have_coef = false;
    if (peek() == '-' || peek() == '+') {
      if (get() == '-') coef = -coef;
      skip();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef *= number();
      have_coef = true;
      skip();
    }
    std::vector<Factor> factors;
    std::map<std::string, std::pair<int, std::size_t>> seen;
    bool expect_factor = !have_coef;
    if (have_coef) {
      if (at_end()) return MonomialExpr(coef, {});
      expect('*');
      expect_factor = true;
    }
    while (expect_factor) {
      skip();
      const std::size_t start = pos_;
      const std::string name = identifier();
      const FactorSpec* spec = nullptr;
      for (const auto& s : kFactors)
        if (name == s.name) spec = &s;
      if (!spec) throw ParseError("unknown factor '" + name + "'", start);
      Factor f{spec->kind, {}};
      skip();
      if (spec->arity > 0) {
        expect('[');
        while (true) {
          skip();
          const std::size_t lpos = pos_;
          const std::string label = identifier();
          auto& entry = seen[label];
          if (++entry.first > 2)
            throw ParseError("label '" + label + "' occurs more than twice", lpos);
          f.labels.push_back(label);
          skip();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          expect(']');
          break;
        }
        if (f.labels.size() != spec->arity)
          throw ParseError("factor '" + name + "' takes " + std::to_string(spec->arity) +
                               " indices, got " + std::to_string(f.labels.size()),
                           start);
        factors.push_back(std::move(f));
      } else {
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          const std::size_t ppos = pos_;
          const Rational p = number();
          if (!is_integer(p) || p < 1 || p > 64) throw ParseError("bad exponent", ppos);
          power = static_cast<int>(numerator(p).convert_to<long>());
        } else if (peek() == '[') {
          throw ParseError("factor '" + name + "' takes no indices", pos_);
        }
        for (int k = 0; k < power; ++k) factors.push_back(f);
      }
      skip();
      if (at_end()) break;
      expect('*');
    }
    skip();
    if (!at_end()) throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return MonomialExpr(coef, std::move(factors));
  }

 private:
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
  std::string identifier() {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError(at_end() ? "expected identifier but input ended" : "expected identifier",
                       pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator", pos_);
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// ---- contraction engine ----

template <class S>
struct Labeled {
  std::vector<int> labels;  // label ids, row-major order
  std::vector<S> data;
};

template <class S>
struct Sources {
  const Rank4<S>* riemann;
  const Rank2<S>* ricci;
  const S* scalar;
  const Rank4<S>* weyl;
};

std::size_t pow4(std::size_t k) { return std::size_t{1} << (2 * k); }

template <class S>
S component(const Factor& f, const Sources<S>& src, const int* idx) {
  const auto& t = thooft::tables();
  switch (f.kind) {
    case FactorKind::riemann: return (*src.riemann)(idx[0], idx[1], idx[2], idx[3]);
    case FactorKind::weyl: return (*src.weyl)(idx[0], idx[1], idx[2], idx[3]);
    case FactorKind::ricci: return (*src.ricci)(idx[0], idx[1]);
    case FactorKind::scalar: return *src.scalar;
    case FactorKind::epsilon: return S(t.eps4[idx[0]][idx[1]][idx[2]][idx[3]]);
    case FactorKind::delta: return S(idx[0] == idx[1] ? 1 : 0);
  }
  return S(0);
}

// Dense tensor for one factor, with labels repeated inside the factor traced out.
template <class S>
Labeled<S> factor_tensor(const Factor& f, const std::vector<int>& ids, const Sources<S>& src) {
  std::vector<int> ext, inner;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto n = std::count(ids.begin(), ids.end(), ids[k]);
    auto& bucket = n == 1 ? ext : inner;
    if (std::find(bucket.begin(), bucket.end(), ids[k]) == bucket.end()) bucket.push_back(ids[k]);
  }
  Labeled<S> out{ext, std::vector<S>(pow4(ext.size()), S(0))};
  std::map<int, int> val;
  int raw[4];
  for (std::size_t e = 0; e < out.data.size(); ++e) {
    for (std::size_t k = 0; k < ext.size(); ++k) val[ext[k]] = (e >> (2 * (ext.size() - 1 - k))) & 3;
    S acc(0);
    for (std::size_t i = 0; i < pow4(inner.size()); ++i) {
      for (std::size_t k = 0; k < inner.size(); ++k)
        val[inner[k]] = (i >> (2 * (inner.size() - 1 - k))) & 3;
      for (std::size_t k = 0; k < ids.size(); ++k) raw[k] = val[ids[k]];
      acc += component(f, src, raw);
    }
    out.data[e] = acc;
  }
  return out;
}

template <class S>
Labeled<S> contract(const Labeled<S>& A, const Labeled<S>& B) {
  std::vector<int> a_only, b_only, shared;
  for (int l : A.labels)
    (std::find(B.labels.begin(), B.labels.end(), l) != B.labels.end() ? shared : a_only).push_back(l);
  for (int l : B.labels)
    if (std::find(A.labels.begin(), A.labels.end(), l) == A.labels.end()) b_only.push_back(l);
  Labeled<S> R;
  R.labels = a_only;
  R.labels.insert(R.labels.end(), b_only.begin(), b_only.end());
  R.data.assign(pow4(R.labels.size()), S(0));

  auto stride = [](const std::vector<int>& labels, int l) -> std::size_t {
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) return 0;
    return pow4(static_cast<std::size_t>(labels.end() - it - 1));
  };
  const std::size_t nb = pow4(b_only.size());
  // Offsets into B and R contributed by each assignment of the B-only labels.
  std::vector<std::size_t> b_off(nb), r_off(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    std::size_t ob = 0, orr = 0;
    for (std::size_t k = 0; k < b_only.size(); ++k) {
      const std::size_t v = (j >> (2 * (b_only.size() - 1 - k))) & 3;
      ob += v * stride(B.labels, b_only[k]);
      orr += v * stride(R.labels, b_only[k]);
    }
    b_off[j] = ob;
    r_off[j] = orr;
  }
  std::vector<std::size_t> a_to_b(A.labels.size()), a_to_r(A.labels.size());
  for (std::size_t k = 0; k < A.labels.size(); ++k) {
    a_to_b[k] = stride(B.labels, A.labels[k]);
    a_to_r[k] = stride(R.labels, A.labels[k]);
  }
  for (std::size_t ia = 0; ia < A.data.size(); ++ia) {
    const S& x = A.data[ia];
    if (x == S(0)) continue;
    std::size_t ob = 0, orr = 0;
    for (std::size_t k = 0; k < A.labels.size(); ++k) {
      const std::size_t v = (ia >> (2 * (A.labels.size() - 1 - k))) & 3;
      ob += v * a_to_b[k];
      orr += v * a_to_r[k];
    }
    for (std::size_t j = 0; j < nb; ++j) {
      const S& y = B.data[ob + b_off[j]];
      if (y == S(0)) continue;
      R.data[orr + r_off[j]] += x * y;
    }
  }
  return R;
}

template <class S>
Labeled<S> evaluate_network(const MonomialExpr& expr, const std::map<std::string, int>& ids,
                            const Sources<S>& src) {
  std::vector<Labeled<S>> ts;
  S scalar_part(1);
  for (const auto& f : expr.factors()) {
    if (f.kind == FactorKind::scalar) {
      scalar_part *= *src.scalar;
      continue;
    }
    std::vector<int> fid;
    for (const auto& l : f.labels) fid.push_back(ids.at(l));
    ts.push_back(factor_tensor(f, fid, src));
  }
  if (ts.empty()) return Labeled<S>{{}, {scalar_part}};
  while (ts.size() > 1) {
    std::size_t bi = 0, bj = 1;
    std::pair<std::size_t, std::size_t> best{SIZE_MAX, SIZE_MAX};
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        std::size_t shared = 0;
        for (int l : ts[i].labels)
          shared += std::count(ts[j].labels.begin(), ts[j].labels.end(), l);
        const std::size_t uni = ts[i].labels.size() + ts[j].labels.size() - shared;
        const std::pair<std::size_t, std::size_t> cost{uni - shared, uni};
        if (cost < best) {
          best = cost;
          bi = i;
          bj = j;
        }
      }
    Labeled<S> c = contract(ts[bi], ts[bj]);
    ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(bj));
    ts[bi] = std::move(c);
  }
  Labeled<S> out = std::move(ts.front());
  if (scalar_part != S(1))
    for (auto& v : out.data) v = v * scalar_part;
  return out;
}

template <class S>
IndexedValue<Rational> run(const MonomialExpr& expr, const std::vector<std::string>& order,
                           const Sources<S>& src) {
  std::map<std::string, int> ids;
  for (const auto& f : expr.factors())
    for (const auto& l : f.labels) ids.emplace(l, static_cast<int>(ids.size()));
  const Labeled<S> t = evaluate_network(expr, ids, src);
  IndexedValue<Rational> out;
  out.labels = order;
  out.values.resize(t.data.size());
  std::vector<std::size_t> strides(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto it = std::find(t.labels.begin(), t.labels.end(), ids.at(order[k]));
    strides[k] = pow4(static_cast<std::size_t>(t.labels.end() - it - 1));
  }
  for (std::size_t o = 0; o < out.values.size(); ++o) {
    std::size_t src_flat = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      src_flat += ((o >> (2 * (order.size() - 1 - k))) & 3) * strides[k];
    out.values[o] = expr.coefficient() * to_rational(t.data[src_flat]);
  }
  return out;
}

}  // namespace

MonomialExpr::MonomialExpr(Rational coefficient, std::vector<Factor> factors)
    : coef_(std::move(coefficient)), factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (f.labels.size() != spec_of(f.kind).arity) throw InputError("factor arity mismatch");
  check_label_counts(factors_);
  free_ = compute_free(factors_);
}

bool MonomialExpr::uses(FactorKind kind) const {
  return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.kind == kind; });
}

MonomialExpr MonomialExpr::scaled(const Rational& s) const {
  MonomialExpr m = *this;
  m.coef_ *= s;
  return m;
}

MonomialExpr MonomialExpr::renamed(const std::string& from, const std::string& to) const {
  std::vector<Factor> fs = factors_;
  for (auto& f : fs)
    for (auto& l : f.labels)
      if (l == from) l = to;
  return MonomialExpr(coef_, std::move(fs));
}

std::string MonomialExpr::str() const {
  std::ostringstream os;
  bool first = true;
  if (coef_ != 1 || factors_.empty()) {
    os << to_string(coef_);
    first = false;
  }
  for (const auto& f : factors_) {
    os << (first ? "" : "*") << spec_of(f.kind).name;
    first = false;
    if (f.labels.empty()) continue;
    os << '[';
    for (std::size_t k = 0; k < f.labels.size(); ++k) os << (k ? "," : "") << f.labels[k];
    os << ']';
  }
  return os.str();
}

MonomialExpr parse_monomial(std::string_view text) { return Parser(text).parse(); }

struct ContractionEvaluator::Impl {
  Rank4<Rational> R, W;
  Rank2<Rational> Ric;
  Rational Sc;
  std::optional<Rank4<CheckedInt>> Ri, Wi;
  Rank2<CheckedInt> Rici;
  CheckedInt Sci;
};

ContractionEvaluator::ContractionEvaluator(const Rank4<Rational>& riemann)
    : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  m.R = riemann;
  m.Ric = Rank2<Rational>::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) m.Ric(a, b) += riemann(c, a, c, b);
  m.Sc = m.Ric.trace();
  m.W = detail::weyl_unchecked(riemann);
  m.Ri = to_checked(riemann);
  if (m.Ri) {
    m.Wi = to_checked(m.W);
    try {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          CheckedInt s(0);
          for (int c = 0; c < 4; ++c) s += (*m.Ri)(c, a, c, b);
          m.Rici(a, b) = s;
        }
      CheckedInt s(0);
      for (int a = 0; a < 4; ++a) s += m.Rici(a, a);
      m.Sci = s;
    } catch (const std::overflow_error&) {
      m.Ri.reset();
    }
  }
}

ContractionEvaluator::~ContractionEvaluator() = default;
ContractionEvaluator::ContractionEvaluator(ContractionEvaluator&&) noexcept = default;
ContractionEvaluator& ContractionEvaluator::operator=(ContractionEvaluator&&) noexcept = default;

const Rank4<Rational>& ContractionEvaluator::riemann() const { return impl_->R; }

IndexedValue<Rational> ContractionEvaluator::evaluate(const MonomialExpr& expr,
                                                      const std::vector<std::string>& order) const {
  std::vector<std::string> out_order = order.empty() ? expr.free_labels() : order;
  {
    auto a = out_order, b = expr.free_labels();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw InputError("output order does not match free labels of '" + expr.str() + "'");
  }
  const Impl& m = *impl_;
  const bool need_weyl = expr.uses(FactorKind::weyl);
  if (m.Ri && (!need_weyl || m.Wi)) {
    try {
      const Sources<CheckedInt> src{&*m.Ri, &m.Rici, &m.Sci, m.Wi ? &*m.Wi : nullptr};
      return run(expr, out_order, src);
    } catch (const std::overflow_error&) {
      // fall through to exact rationals
    }
  }
  const Sources<Rational> src{&m.R, &m.Ric, &m.Sc, &m.W};
  return run(expr, out_order, src);
}

IndexedValue<Rational> evaluate_monomial(const MonomialExpr& expr, const Rank4<Rational>& T,
                                         const std::vector<std::string>& order) {
  return ContractionEvaluator(T).evaluate(expr, order);
}

}  // namespace riemann
