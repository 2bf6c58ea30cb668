#include "blockpoly/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "blockpoly/errors.hpp"

namespace blockpoly {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  while (u != 0) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt::BigInt(std::string_view decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(std::string_view s) {
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw FormatError("empty integer literal");
  BigInt r;
  // Consume 9 decimal digits at a time: r = r * 10^k + chunk.
  while (i < s.size()) {
    uint32_t chunk = 0;
    uint32_t scale = 1;
    int taken = 0;
    while (i < s.size() && taken < 9) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw FormatError("invalid digit in integer literal");
      chunk = chunk * 10 + static_cast<uint32_t>(s[i] - '0');
      scale *= 10;
      ++i;
      ++taken;
    }
    uint64_t carry = 0;
    for (auto& limb : r.mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) * scale + carry;
      limb = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<uint32_t>(carry));
    carry = chunk;
    for (std::size_t j = 0; j < r.mag_.size() && carry; ++j) {
      uint64_t cur = static_cast<uint64_t>(r.mag_[j]) + carry;
      r.mag_[j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<uint32_t>(carry));
  }
  r.sign_ = r.mag_.empty() ? 0 : sign;
  r.normalize();
  return r;
}

void BigInt::normalize() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> r(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  r[hi.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (cur < 0) {
      cur += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(cur);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
      r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (compare_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  const int shift = std::countl_zero(b.back());
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  // Normalized copies: v = b << shift, u = a << shift with one extra high limb.
  std::vector<uint32_t> v(n), u(a.size() + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    uint64_t cur = static_cast<uint64_t>(b[i]) << shift;
    if (shift && i > 0) cur |= b[i - 1] >> (32 - shift);
    v[i] = static_cast<uint32_t>(cur & 0xffffffffu);
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    uint64_t cur = static_cast<uint64_t>(a[i]) << shift;
    if (shift && i > 0) cur |= a[i - 1] >> (32 - shift);
    u[i] = static_cast<uint32_t>(cur & 0xffffffffu);
  }
  if (shift) u[a.size()] = static_cast<uint32_t>(a.back() >> (32 - shift));

  q.assign(m + 1, 0);
  const uint64_t vtop = v[n - 1];
  const uint64_t vnext = v[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = num - qhat * vtop;
    }
    while (rhat < kBase && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // u[j .. j+n] -= qhat * v
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t prod = qhat * v[i] + carry;
      carry = prod >> 32;
      int64_t cur = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(prod & 0xffffffffu) - borrow;
      if (cur < 0) {
        cur += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(cur);
    }
    int64_t top = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large: add v back.
      top += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
        c2 = cur >> 32;
      }
      top += static_cast<int64_t>(c2);
      top &= static_cast<int64_t>(0xffffffffu);
    }
    u[j + n] = static_cast<uint32_t>(top);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t cur = u[i] >> shift;
    if (shift && i + 1 < u.size()) cur |= static_cast<uint64_t>(u[i + 1]) << (32 - shift);
    r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = compare_mag(mag_, o.mag_);
    if (c == 0) {
      mag_.clear();
      sign_ = 0;
    } else if (c > 0) {
      mag_ = sub_mag(mag_, o.mag_);
    } else {
      mag_ = sub_mag(o.mag_, mag_);
      sign_ = o.sign_;
    }
  }
  normalize();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  r.sign_ = a.sign_ == b.sign_ ? 1 : -1;
  r.normalize();
  return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder) {
  if (b.sign_ == 0) throw DomainError("division by zero");
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  quotient.mag_ = std::move(qm);
  remainder.mag_ = std::move(rm);
  quotient.sign_ = quotient.mag_.empty() ? 0 : (a.sign_ == b.sign_ ? 1 : -1);
  remainder.sign_ = remainder.mag_.empty() ? 0 : a.sign_;
  quotient.normalize();
  remainder.normalize();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::divide_exact(const BigInt& divisor) const {
  BigInt q, r;
  divmod(*this, divisor, q, r);
  if (!r.is_zero()) throw DomainError("divide_exact: division is not exact");
  return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  int c = compare_mag(mag_, o.mag_);
  if (sign_ < 0) c = -c;
  return c <=> 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> work = mag_;
  std::string digits;
  while (!work.empty()) {
    uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double BigInt::to_double() const {
  double v = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -v : v;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  uint64_t u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) return u <= static_cast<uint64_t>(std::numeric_limits<long long>::max());
  return u <= static_cast<uint64_t>(std::numeric_limits<long long>::max()) + 1;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw DomainError("BigInt does not fit in int64");
  uint64_t u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) return static_cast<long long>(u);
  return static_cast<long long>(~u + 1);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace blockpoly
