#include "riemann/scalar.hpp"

#include <cctype>
#include <limits>

namespace riemann {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  const Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool fits_int64(const Rational& q) {
  if (!is_integer(q)) return false;
  const Integer n = numerator(q);
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace riemann
