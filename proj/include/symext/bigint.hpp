#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "symext/error.hpp"

namespace symext {

// All exact arithmetic runs on arbitrary-precision integers. Intermediate
// entries of a Smith reduction can exceed machine words even for small inputs.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / int_gcd(a, b) * b);
}

inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// Canonical residue in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t to_i64(const Int& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
    fail("integer too large for 64-bit serialization: " + a.str());
  return static_cast<std::int64_t>(a);
}

inline std::string rational_str(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace symext
