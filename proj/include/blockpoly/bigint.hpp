#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace blockpoly {

// Signed arbitrary-precision integer: sign + little-endian base-2^32 magnitude.
// Covers what the exact coefficient ring needs: +, -, *, truncated divmod
// (exact division for Bareiss and the Schur case-2 rescaling), comparison,
// decimal I/O. No modular machinery.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, small literals are everywhere
  explicit BigInt(std::string_view decimal);

  static BigInt from_string(std::string_view decimal);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated toward zero; remainder has the dividend's sign. b must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  // Division known to be exact; throws DomainError if a remainder appears.
  BigInt divide_exact(const BigInt& divisor) const;

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  std::strong_ordering operator<=>(const BigInt& o) const;

  std::string to_string() const;
  double to_double() const;
  bool fits_int64() const;
  long long to_int64() const;  // DomainError if out of range

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // normalized: no high zero limbs; empty iff sign_ == 0

  void normalize();
  static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace blockpoly
