#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncg/errors.hpp"

namespace ncg {

/// Arbitrary-precision signed integer. Every exact quantity in this library
/// (polynomial coefficients, indices, transmissions) is a BigInt so that no
/// verification ever silently wraps.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Narrow to int64 for serialization; throws instead of truncating.
inline long long to_int64(const BigInt& value) {
  if (value < std::numeric_limits<long long>::min() ||
      value > std::numeric_limits<long long>::max()) {
    throw InvalidParameter("value " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<long long>(value);
}

}  // namespace ncg
