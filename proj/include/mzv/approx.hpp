#pragma once
/// @file approx.hpp
/// @brief Value-with-error-bound arithmetic used by every evaluator.
///
/// An Approx carries a computed double `value` together with an absolute
/// error bound `err` (always finite, always >= 0).  Arithmetic propagates
/// bounds first-order-interval style:
///   sum/difference : errors add;
///   product        : |a|*eb + |b|*ea + ea*eb (exact for intervals around 0).
/// The bounds are *claims* the evaluators must honor; the test suite checks
/// them against independent oracles.

#include <cmath>
#include <stdexcept>
#include <string>

namespace mzv {

struct Approx {
  double value = 0.0;
  double err = 0.0;      ///< absolute error bound, finite, >= 0
  bool truncated = false;  ///< set when a budget stop left the bound coarse

  Approx() = default;
  Approx(double v, double e, bool tr = false) : value(v), err(e), truncated(tr) {
    if (!(std::isfinite(v) && std::isfinite(e)) || e < 0.0)
      throw std::invalid_argument("Approx: non-finite value or bad err");
  }

  static Approx exact(double v) { return Approx(v, 0.0); }

  Approx operator+(const Approx& o) const {
    return Approx(value + o.value, err + o.err + ulp_slack(value + o.value),
                  truncated || o.truncated);
  }
  Approx operator-(const Approx& o) const {
    return Approx(value - o.value, err + o.err + ulp_slack(value - o.value),
                  truncated || o.truncated);
  }
  Approx operator*(const Approx& o) const {
    const double e = std::fabs(value) * o.err + std::fabs(o.value) * err +
                     err * o.err;
    return Approx(value * o.value, e + ulp_slack(value * o.value),
                  truncated || o.truncated);
  }
  Approx scaled(double c) const {
    return Approx(c * value, std::fabs(c) * err + ulp_slack(c * value),
                  truncated);
  }
  Approx& operator+=(const Approx& o) { return *this = *this + o; }

  /// Widen the bound (never narrows).
  Approx widened(double extra) const {
    return Approx(value, err + extra, truncated);
  }

  std::string str() const {
    return std::to_string(value) + " +/- " + std::to_string(err);
  }

 private:
  /// one-ulp rounding slack per arithmetic op so the carried bound also
  /// covers the double rounding of the combination itself
  static double ulp_slack(double v) {
    return std::fabs(v) * 2.220446049250313e-16;
  }
};

}  // namespace mzv
