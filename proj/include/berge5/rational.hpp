#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace berge5 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Exact test of a <= c * sqrt(n) for integers a, c, n with c, n >= 0.
inline bool le_times_sqrt(const BigInt& a, const BigInt& c, const BigInt& n) {
  if (a <= 0) return true;
  return a * a <= c * c * n;
}

}  // namespace berge5
