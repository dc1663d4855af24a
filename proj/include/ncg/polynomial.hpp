#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncg/bigint.hpp"
#include "ncg/errors.hpp"

namespace ncg {

/// Integer-coefficient polynomial in one variable, stored as a map from
/// exponent to non-zero coefficient. The zero polynomial is the empty map.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  static SparsePolynomial monomial(BigInt coefficient, int exponent) {
    SparsePolynomial p;
    p.add_term(exponent, std::move(coefficient));
    return p;
  }

  /// Adds coefficient * x^exponent, erasing the term if it cancels to zero.
  void add_term(int exponent, const BigInt& coefficient) {
    if (exponent < 0) {
      throw InvalidParameter("polynomial exponents must be non-negative");
    }
    if (coefficient == 0) {
      return;
    }
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  const std::map<int, BigInt>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  bool operator==(const SparsePolynomial& other) const = default;

  /// Canonical text form: strictly decreasing exponents, coefficient 1
  /// suppressed except at exponent 0, "x^1" rendered as "x". E.g. "6x^2+12x".
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [exponent, coefficient] = *it;
      BigInt magnitude = coefficient;
      if (it == terms_.rbegin()) {
        if (coefficient < 0) {
          out += "-";
          magnitude = -coefficient;
        }
      } else {
        out += coefficient < 0 ? "-" : "+";
        if (coefficient < 0) {
          magnitude = -coefficient;
        }
      }
      if (magnitude != 1 || exponent == 0) {
        out += magnitude.str();
      }
      if (exponent == 1) {
        out += "x";
      } else if (exponent > 1) {
        out += "x^" + std::to_string(exponent);
      }
    }
    return out;
  }

 private:
  std::map<int, BigInt> terms_;
};

inline SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial sum = a;
  for (const auto& [exponent, coefficient] : b.terms()) {
    sum.add_term(exponent, coefficient);
  }
  return sum;
}

inline BigInt poly_eval(const SparsePolynomial& p, const BigInt& x) {
  // Iterate downward so Horner steps only ever multiply by powers of x.
  BigInt acc = 0;
  int previous_exponent = 0;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [exponent, coefficient] = *it;
    if (first) {
      acc = coefficient;
      first = false;
    } else {
      acc *= boost::multiprecision::pow(x, static_cast<unsigned>(previous_exponent - exponent));
      acc += coefficient;
    }
    previous_exponent = exponent;
  }
  if (!first && previous_exponent > 0) {
    acc *= boost::multiprecision::pow(x, static_cast<unsigned>(previous_exponent));
  }
  return acc;
}

/// d/dx at x=1, i.e. the sum of exponent * coefficient. This is how every
/// "index" (detour, eccentric connectivity, total eccentricity) falls out of
/// its polynomial.
inline BigInt poly_derivative_at_one(const SparsePolynomial& p) {
  BigInt total = 0;
  for (const auto& [exponent, coefficient] : p.terms()) {
    total += BigInt(exponent) * coefficient;
  }
  return total;
}

}  // namespace ncg
