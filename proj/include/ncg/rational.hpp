#pragma once

#include <compare>
#include <string>
#include <utility>

#include "ncg/bigint.hpp"
#include "ncg/errors.hpp"

namespace ncg {

/// Exact rational number, always in lowest terms with a positive denominator.
/// Used for the mean distance, where equality against closed forms must be
/// exact: (5n^2-9n+4)/((2n-1)(2n-2)) and (5n-4)/(4n-2) have to compare equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
      throw InvalidParameter("rational denominator must be non-zero");
    }
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  /// Renders "p/q", or just "p" when the denominator is 1.
  std::string to_string() const {
    if (den_ == 1) {
      return num_.str();
    }
    return num_.str() + "/" + den_.str();
  }

  // Canonical form makes field-wise equality correct.
  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) {
      den_ = 1;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace ncg
