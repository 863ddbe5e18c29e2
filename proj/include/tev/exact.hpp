#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tev/errors.hpp"

namespace tev {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the vanishing convention: zero for k < 0 or k > n.
inline ExactInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidInput("binom: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact: acc is C(n-k+i, i) after this step
  }
  return acc;
}

inline ExactInt factorial(std::int64_t n) {
  if (n < 0) throw InvalidInput("factorial: negative argument " + std::to_string(n));
  ExactInt acc = 1;
  for (std::int64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline ExactInt ipow(const ExactInt& base, std::int64_t exp) {
  if (exp < 0) throw InvalidInput("ipow: negative exponent " + std::to_string(exp));
  ExactInt acc = 1;
  ExactInt b = base;
  while (exp > 0) {
    if (exp & 1) acc *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return acc;
}

inline std::string to_decimal(const ExactInt& x) { return x.str(); }

inline std::string to_decimal(const ExactRat& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline bool is_integral(const ExactRat& x) { return boost::multiprecision::denominator(x) == 1; }

/// Converts an integral rational; anything else is an invariant breach.
inline ExactInt require_integral(const ExactRat& x, const std::string& context) {
  if (!is_integral(x)) {
    throw InvariantBreach(context + ": expected an integer, got " + to_decimal(x));
  }
  return boost::multiprecision::numerator(x);
}

}  // namespace tev
