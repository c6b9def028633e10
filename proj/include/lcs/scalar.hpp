#ifndef LCS_SCALAR_HPP
#define LCS_SCALAR_HPP

#include <string>

#include "lcs/bigint.hpp"
#include "lcs/error.hpp"

namespace lcs {

// Exact rational; always reduced, denominator > 0, zero is 0/1.
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(long long v) : num_(v), den_(1) {}  // intentionally implicit
  Scalar(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Scalar(long long n, long long d) : num_(n), den_(d) { reduce(); }

  static Scalar from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Scalar(BigInt::from_string(s), BigInt(1));
    return Scalar(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
  bool is_integer() const { return den_ == BigInt(1); }
  bool is_negative() const { return num_.is_negative(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("scalar: division by zero");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.num_, a.den_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  static Scalar factorial(unsigned n) {
    Scalar r(1);
    for (unsigned k = 2; k <= n; ++k) r = r * Scalar(static_cast<long long>(k));
    return r;
  }

  std::string to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_, den_;

  void reduce() {
    if (den_.is_zero()) throw error("scalar: zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
  }
};

}  // namespace lcs

#endif
