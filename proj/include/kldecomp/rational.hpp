#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace kldecomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Rational -> float64. Exactly rounded whenever numerator and denominator
// both fit in 53 bits (IEEE division of exact operands); falls back to
// Boost's conversion for larger values.
inline double to_double(const Rational& value) {
  static const BigInt kTwo53 = BigInt(1) << 53;
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (abs(num) < kTwo53 && den < kTwo53) {
    return static_cast<double>(num.convert_to<std::int64_t>()) /
           static_cast<double>(den.convert_to<std::int64_t>());
  }
  return value.convert_to<double>();
}

}  // namespace kldecomp
