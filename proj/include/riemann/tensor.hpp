#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "riemann/scalar.hpp"

namespace riemann {

template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;

template <class S>
using Rank2 = Eigen::Matrix<S, 4, 4>;

/// Dense 4x4x4x4 tensor with 0-based indices, row-major in (a, b, c, d).
template <class S>
class Rank4 {
 public:
  using Scalar = S;
  static constexpr std::size_t kSize = 256;

  Rank4() { data_.fill(S(0)); }

  static Rank4 Zero() { return Rank4(); }

  S& operator()(int a, int b, int c, int d) { return data_[flat(a, b, c, d)]; }
  const S& operator()(int a, int b, int c, int d) const { return data_[flat(a, b, c, d)]; }

  S& operator[](std::size_t i) { return data_[i]; }
  const S& operator[](std::size_t i) const { return data_[i]; }

  static constexpr std::size_t flat(int a, int b, int c, int d) {
    return static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d);
  }

  template <class T>
  Rank4<T> cast() const {
    Rank4<T> out;
    for (std::size_t i = 0; i < kSize; ++i) out[i] = static_cast<T>(data_[i]);
    return out;
  }

  bool isZero() const {
    for (const S& x : data_)
      if (x != S(0)) return false;
    return true;
  }

  friend bool operator==(const Rank4& x, const Rank4& y) { return x.data_ == y.data_; }

  friend Rank4 operator+(Rank4 x, const Rank4& y) {
    for (std::size_t i = 0; i < kSize; ++i) x.data_[i] += y.data_[i];
    return x;
  }
  friend Rank4 operator-(Rank4 x, const Rank4& y) {
    for (std::size_t i = 0; i < kSize; ++i) x.data_[i] -= y.data_[i];
    return x;
  }
  friend Rank4 operator*(const S& s, Rank4 x) {
    for (auto& v : x.data_) v *= s;
    return x;
  }

  const std::array<S, kSize>& data() const { return data_; }

 private:
  std::array<S, kSize> data_;
};

}  // namespace riemann
