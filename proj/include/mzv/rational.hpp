#pragma once
/// @file rational.hpp
/// @brief Exact rational scalars for relation coefficients.
///
/// Relation coefficients (binomials, factorials, alternating signs, zeta(2)
/// powers' rational multipliers) are held exactly so term-multiset
/// comparisons between independently derived relations are exact, never
/// tolerance-based.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact big integer.
inline BigInt factorial(int n) {
  if (n < 0) fail(Errc::domain, "factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact binomial coefficient C(n, k) for integer n >= 0.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= (n - k + i);
    den *= i;
  }
  return num / den;
}

/// Rising-factorial based binomial C(s + j - 1, j) for *integer* s >= 1:
/// equals Gamma(s+j)/(Gamma(s) j!).
inline Rational binom_shifted(int s, int j) {
  if (j < 0) fail(Errc::domain, "binom_shifted: j >= 0 required");
  BigInt num = 1;
  for (int i = 0; i < j; ++i) num *= (s + i);
  return Rational(num, factorial(j));
}

// --- serialization ("p/q", lowest terms, q > 0) -----------------------------
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

/// Nearest double (used when a scalar multiplies a numeric term evaluation).
inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace mzv
