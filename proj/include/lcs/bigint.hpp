#ifndef LCS_BIGINT_HPP
#define LCS_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcs/error.hpp"

namespace lcs {

// Arbitrary-precision signed integer, sign + little-endian 32-bit limbs.
// Magnitudes in this project are tiny (structure constants, factorials of
// window indices); schoolbook arithmetic is plenty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // intentionally implicit
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u) {
      mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
      u >>= 32;
    }
  }

  static BigInt from_string(const std::string& s) {
    BigInt r;
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) sign = s[i++] == '-' ? -1 : 1;
    if (i == s.size()) throw error("bigint: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw error("bigint: bad digit in '" + s + "'");
      r = mul_small(r, 10);
      r = add_small(r, static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (r.sign_ != 0) r.sign_ = sign;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division: quotient rounds toward zero, remainder has the
  // dividend's sign. Only exact divisions and gcd reductions use this here.
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw error("bigint: division by zero");
    q = BigInt();
    r = BigInt();
    if (a.sign_ == 0) return;
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      r = a;
      return;
    }
    // binary long division over the magnitude bits
    std::size_t bits = a.mag_.size() * 32;
    std::vector<std::uint32_t> qm(a.mag_.size(), 0), rm;
    for (std::size_t i = bits; i-- > 0;) {
      shl1(rm);
      if ((a.mag_[i / 32] >> (i % 32)) & 1u) {
        if (rm.empty()) rm.push_back(1);
        else rm[0] |= 1u;
      }
      if (cmp_mag(rm, b.mag_) >= 0) {
        rm = sub_mag(rm, b.mag_);
        qm[i / 32] |= (1u << (i % 32));
      }
    }
    q.mag_ = qm;
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = rm;
    r.trim();
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divrem(a, b, q, r);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }

  static BigInt abs(const BigInt& a) { return a.sign_ < 0 ? -a : a; }

  static BigInt gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      while (!m.empty() && m.back() == 0) m.pop_back();
    }
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0 ? 1 : 0;
      if (cur < 0) cur += (1ll << 32);
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static void shl1(std::vector<std::uint32_t>& m) {
    std::uint32_t carry = 0;
    for (auto& limb : m) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) m.push_back(carry);
  }

  static BigInt mul_small(const BigInt& a, std::uint32_t f) {
    if (a.sign_ == 0 || f == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_;
    std::uint64_t carry = 0;
    for (std::uint32_t limb : a.mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
      r.mag_.push_back(static_cast<std::uint32_t>(cur));
      carry = cur >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  static BigInt add_small(const BigInt& a, std::uint32_t v) { return a + BigInt(static_cast<long long>(v)); }
};

}  // namespace lcs

#endif
