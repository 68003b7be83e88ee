#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

namespace topo {

/// Exact integers and rationals (rationals are kept in lowest terms with a
/// positive denominator).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max();
}

}  // namespace topo
