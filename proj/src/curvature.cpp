#include "riemann/curvature.hpp"

#include <sstream>

namespace riemann {

std::string ValidationReport::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    os << (first ? "" : "; ") << v.symmetry << " violated at (" << v.index[0] << "," << v.index[1]
       << "," << v.index[2] << "," << v.index[3] << "), residual " << to_string(v.residual);
    first = false;
  }
  return os.str();
}

std::optional<Rank4<CheckedInt>> to_checked(const Rank4<Rational>& T) {
  Rank4<CheckedInt> out;
  for (std::size_t i = 0; i < Rank4<Rational>::kSize; ++i) {
    if (!fits_int64(T[i])) return std::nullopt;
    out[i] = CheckedInt(numerator(T[i]).convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace riemann
