#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "blockpoly/bigint.hpp"

namespace blockpoly {

using Complex = std::complex<double>;

// The two coefficient rings of the library: exact integers and complex floats.
// Everything numeric is templated over R and reads its behaviour from here.
template <class R>
struct coeff_traits;

template <>
struct coeff_traits<BigInt> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "int";
  static BigInt zero() { return BigInt(); }
  static BigInt one() { return BigInt(1); }
  static BigInt from_int(long long v) { return BigInt(v); }
  static bool is_zero(const BigInt& x) { return x.is_zero(); }
  static double magnitude(const BigInt& x) { return std::fabs(x.to_double()); }
  static std::string to_string(const BigInt& x) { return x.to_string(); }
};

template <>
struct coeff_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "complex";
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string to_string(const Complex& x);
};

std::string format_double(double v);

inline std::string coeff_traits<Complex>::to_string(const Complex& x) {
  if (x.imag() == 0.0) return format_double(x.real());
  std::string s = format_double(x.real());
  s += x.imag() < 0 ? "-" : "+";
  double im = std::fabs(x.imag());
  if (im != 1.0) s += format_double(im);
  s += "i";
  return s;
}

}  // namespace blockpoly
