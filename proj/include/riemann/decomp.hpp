#pragma once

#include <string>

#include "riemann/curvature.hpp"
#include "riemann/scalar.hpp"
#include "riemann/tensor.hpp"
#include "riemann/thooft.hpp"

namespace riemann {

/// The three 3x3 blocks of a four-dimensional curvature tensor in the
/// 't Hooft basis: A_plus (self-dual), A_minus (anti-self-dual), and the
/// mixed block B. A_plus, A_minus are symmetric with equal traces; the
/// constructor rejects anything else.
template <class S>
class FBlocks {
 public:
  FBlocks(Mat3<S> a_plus, Mat3<S> a_minus, Mat3<S> b)
      : ap_(std::move(a_plus)), am_(std::move(a_minus)), b_(std::move(b)) {
    if (ap_ != ap_.transpose()) throw InputError("A_plus is not symmetric");
    if (am_ != am_.transpose()) throw InputError("A_minus is not symmetric");
    if (ap_.trace() != am_.trace())
      throw InputError("trace(A_plus) != trace(A_minus)");
  }

  const Mat3<S>& a_plus() const { return ap_; }
  const Mat3<S>& a_minus() const { return am_; }
  const Mat3<S>& b() const { return b_; }

  bool is_einstein() const { return b_ == Mat3<S>::Zero(); }
  /// Scalar curvature 4(tr A_plus + tr A_minus).
  S scalar_curvature() const { return S(4) * (ap_.trace() + am_.trace()); }

  friend bool operator==(const FBlocks& x, const FBlocks& y) {
    return x.ap_ == y.ap_ && x.am_ == y.am_ && x.b_ == y.b_;
  }

 private:
  Mat3<S> ap_, am_, b_;
};

/// Traceless parts of A_plus and A_minus (the Weyl tensor's blocks).
template <class S>
struct WeylBlocks {
  Mat3<S> a_plus;
  Mat3<S> a_minus;
};

/// Orientation reversal: A_plus <-> A_minus, B -> B^T.
template <class S>
FBlocks<S> parity(const FBlocks<S>& F) {
  return FBlocks<S>(F.a_minus(), F.a_plus(), F.b().transpose());
}

template <class S>
WeylBlocks<S> weyl_blocks(const FBlocks<S>& F) {
  const Mat3<S> id = Mat3<S>::Identity();
  return {F.a_plus() - (F.a_plus().trace() / S(3)) * id,
          F.a_minus() - (F.a_minus().trace() / S(3)) * id};
}

template <class S>
bool is_einstein(const FBlocks<S>& F) {
  return F.is_einstein();
}

/// R_abcd = A+_ij eta^i_ab eta^j_cd + B_ij eta^i_ab etabar^j_cd
///        + B_ji etabar^i_ab eta^j_cd + A-_ij etabar^i_ab etabar^j_cd.
template <class S>
Rank4<S> reconstruct(const FBlocks<S>& F) {
  const auto& H = thooft::tables().eta;
  // M[s][t] = block for (eta^(s), eta^(t)), s,t in {0 = eta, 1 = etabar}.
  const Mat3<S> bt = F.b().transpose();
  const Mat3<S>* M[2][2] = {{&F.a_plus(), &F.b()}, {&bt, &F.a_minus()}};
  Rank4<S> R;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          S v(0);
          for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
              for (int i = 0; i < 3; ++i) {
                if (H[s][i][a][b] == 0) continue;
                for (int j = 0; j < 3; ++j)
                  if (H[t][j][c][d] != 0) v += S(H[s][i][a][b] * H[t][j][c][d]) * (*M[s][t])(i, j);
              }
          R(a, b, c, d) = v;
          R(b, a, c, d) = -v;
          R(a, b, d, c) = -v;
          R(b, a, d, c) = v;
        }
  return R;
}

/// Inverse of reconstruct. Throws PreconditionError naming every violated
/// curvature symmetry when T is not an algebraic curvature tensor.
template <class S>
FBlocks<S> decompose(const Rank4<S>& T) {
  const ValidationReport rep = validate_riemann(T);
  if (!rep.ok()) throw PreconditionError("not a curvature tensor: " + rep.describe());
  const auto& H = thooft::tables().eta;
  Mat3<S> blk[2][2];
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      blk[s][t] = Mat3<S>::Zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          S v(0);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
              if (H[s][i][a][b] == 0) continue;
              for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                  if (H[t][j][c][d] != 0) v += S(H[s][i][a][b] * H[t][j][c][d]) * T(a, b, c, d);
            }
          blk[s][t](i, j) = v / S(16);
        }
    }
  if (blk[1][0] != blk[0][1].transpose())
    throw PreconditionError("mixed blocks are not transposes of each other");
  return FBlocks<S>(blk[0][0], blk[1][1], blk[0][1]);
}

/// Traceless Ricci from the mixed block: S_ab = 2 B_ij eta^i_ac etabar^j_bc.
template <class S>
Rank2<S> traceless_ricci(const FBlocks<S>& F) {
  const auto& H = thooft::tables().eta;
  Rank2<S> out = Rank2<S>::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (H[0][i][a][c] * H[1][j][b][c] != 0)
              out(a, b) += S(2 * H[0][i][a][c] * H[1][j][b][c]) * F.b()(i, j);
  return out;
}

}  // namespace riemann
