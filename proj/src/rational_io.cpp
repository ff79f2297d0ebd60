/// @file rational_io.cpp
/// @brief "p/q" serialization of exact rational scalars.

#include "mzv/rational.hpp"

#include <sstream>

namespace mzv {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt p(text.substr(0, slash));
    const BigInt q(text.substr(slash + 1));
    if (q == 0) fail(Errc::parse, "rational with zero denominator: " + text);
    return Rational(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse, "malformed rational: " + text);
  }
}

}  // namespace mzv
