#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pichar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const BigRational& q) { return numerator(q); }
inline BigInt rational_den(const BigRational& q) { return denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string rational_to_string(const BigRational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace pichar
