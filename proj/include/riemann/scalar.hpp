#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace riemann {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Malformed user input: bad JSON, bad expression text, bad ranges.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data outside its domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "n" or "p/q" (optional sign, q > 0). Throws InputError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// int64 arithmetic that throws std::overflow_error instead of wrapping.
/// Used as a fast scalar when every input component is integral.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow();
    return r;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }

 private:
  [[noreturn]] static void overflow() { throw std::overflow_error("int64 overflow"); }
  std::int64_t v_ = 0;
};

inline Rational to_rational(CheckedInt x) { return Rational(x.value()); }
inline const Rational& to_rational(const Rational& x) { return x; }

/// True when q is an integer that fits in int64.
bool fits_int64(const Rational& q);

}  // namespace riemann
