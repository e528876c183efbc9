#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riemann/scalar.hpp"
#include "riemann/tensor.hpp"
#include "riemann/thooft.hpp"

namespace riemann {

struct SymmetryViolation {
  std::string symmetry;          // e.g. "Pair symmetry"
  std::array<int, 4> index{};    // 1-based
  Rational residual;
};

struct ValidationReport {
  bool antisymmetry = true;   // R_abcd = -R_bacd = -R_abdc
  bool first_bianchi = true;  // R_abcd + R_acdb + R_adbc = 0
  bool pair_symmetry = true;  // R_abcd = R_cdab
  bool eps_trace = true;      // eps_abcd R_abcd = 0
  std::vector<SymmetryViolation> violations;  // first violation per failed symmetry

  bool ok() const { return antisymmetry && first_bianchi && pair_symmetry && eps_trace; }
  /// Human-readable list of violated symmetries, empty when ok().
  std::string describe() const;
};

template <class S>
ValidationReport validate_riemann(const Rank4<S>& R) {
  ValidationReport rep;
  auto note = [&](bool& flag, const char* name, int a, int b, int c, int d, const S& r) {
    if (flag) rep.violations.push_back({name, {a + 1, b + 1, c + 1, d + 1}, to_rational(r)});
    flag = false;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const S& x = R(a, b, c, d);
          if (x + R(b, a, c, d) != S(0)) note(rep.antisymmetry, "Antisymmetry", a, b, c, d, x + R(b, a, c, d));
          else if (x + R(a, b, d, c) != S(0))
            note(rep.antisymmetry, "Antisymmetry", a, b, c, d, x + R(a, b, d, c));
          const S bianchi = x + R(a, c, d, b) + R(a, d, b, c);
          if (bianchi != S(0)) note(rep.first_bianchi, "First Bianchi identity", a, b, c, d, bianchi);
          if (x != R(c, d, a, b)) note(rep.pair_symmetry, "Pair symmetry", a, b, c, d, x - R(c, d, a, b));
        }
  S trace(0);
  const auto& E = thooft::tables().eps4;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (E[a][b][c][d] != 0) trace += S(E[a][b][c][d]) * R(a, b, c, d);
  if (trace != S(0)) note(rep.eps_trace, "Epsilon trace", 0, 1, 2, 3, trace);
  return rep;
}

// Derived-tensor operations trust their input; checked builds (Debug, see
// RIEMANN_CHECKED) validate it and throw PreconditionError instead.
#ifdef RIEMANN_CHECKED
#define RIEMANN_ASSERT_VALID(T)                                                           \
  do {                                                                                    \
    const auto rep_ = ::riemann::validate_riemann(T);                                     \
    if (!rep_.ok()) throw ::riemann::PreconditionError("not a curvature tensor: " + rep_.describe()); \
  } while (false)
#else
#define RIEMANN_ASSERT_VALID(T) ((void)0)
#endif

namespace detail {

template <class S>
Rank2<S> ricci_unchecked(const Rank4<S>& R) {
  Rank2<S> out = Rank2<S>::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) out(a, b) += R(c, a, c, b);
  return out;
}

template <class S>
Rank4<S> weyl_unchecked(const Rank4<S>& R) {
  const Rank2<S> Ric = ricci_unchecked(R);
  const S scal = Ric.trace();
  auto d = [](int x, int y) { return S(x == y ? 1 : 0); };
  Rank4<S> W;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int e = 0; e < 4; ++e) {
          S v = R(a, b, c, e);
          v -= (d(a, c) * Ric(b, e) - d(a, e) * Ric(b, c) - d(b, c) * Ric(a, e) + d(b, e) * Ric(a, c)) /
               S(2);
          v += (d(a, c) * d(b, e) - d(a, e) * d(b, c)) * scal / S(6);
          W(a, b, c, e) = v;
        }
  return W;
}

}  // namespace detail

/// R_ab = R_cacb (sum over c).
template <class S>
Rank2<S> ricci(const Rank4<S>& R) {
  RIEMANN_ASSERT_VALID(R);
  return detail::ricci_unchecked(R);
}

template <class S>
S ricci_scalar(const Rank4<S>& R) {
  const Rank2<S> Ric = ricci(R);
  S s(0);
  for (int a = 0; a < 4; ++a) s += Ric(a, a);
  return s;
}

/// S_ab = R_ab - (1/4) delta_ab R.
template <class S>
Rank2<S> traceless_ricci(const Rank4<S>& R) {
  Rank2<S> Ric = ricci(R);
  const S quarter = Ric.trace() / S(4);
  for (int a = 0; a < 4; ++a) Ric(a, a) -= quarter;
  return Ric;
}

/// Weyl tensor in four dimensions.
template <class S>
Rank4<S> weyl(const Rank4<S>& R) {
  RIEMANN_ASSERT_VALID(R);
  return detail::weyl_unchecked(R);
}

/// Rtilde_abcd = (1/2) eps_cdef R_abef.
template <class S>
Rank4<S> pseudo_riemann(const Rank4<S>& R) {
  RIEMANN_ASSERT_VALID(R);
  const auto& E = thooft::tables().eps4;
  Rank4<S> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          S v(0);
          for (int e = 0; e < 4; ++e)
            for (int f = 0; f < 4; ++f)
              if (E[c][d][e][f] != 0) v += S(E[c][d][e][f]) * R(a, b, e, f);
          out(a, b, c, d) = v / S(2);
        }
  return out;
}

/// Maximally symmetric tensor with scalar curvature R: (R/12)(d_ac d_bd - d_ad d_bc).
template <class S>
Rank4<S> constant_curvature(const S& scalar) {
  Rank4<S> out;
  const S k = scalar / S(12);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      out(a, b, a, b) = k;
      out(a, b, b, a) = -k;
    }
  return out;
}

/// Integer copy of T when every component is an int64-sized integer.
std::optional<Rank4<CheckedInt>> to_checked(const Rank4<Rational>& T);

}  // namespace riemann
