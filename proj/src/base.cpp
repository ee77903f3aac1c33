#include "singlink/base.hpp"

#include <limits>

namespace singlink {

std::string str(const IVec3& v) {
  return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + ")";
}

std::string str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t to_i64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) throw input_error("integer out of 64-bit range: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace singlink
