#pragma once
/// @file tails.hpp
/// @brief Certified enclosures for tails of slowly varying sums:
///        sum_{m>N} ln^p(m) * m^{-sigma}  (sigma > 1, p >= 0)
/// and the Riemann zeta values / tails built on them.
///
/// Every routine returns an interval [value-err, value+err] proved to
/// contain the true sum, using integral sandwiches:
///   order 0: decreasing f:  I(N+1) <= S <= I(N)
///   order 1: convex f:      I(N+1) + f(N+1)/2 <= S <= I(N+1/2)
///   order 2: order 1 after peeling a few exact leading terms
/// where I(X) = int_X^inf f has the closed form
///   I(X) = X^{1-sigma} * sum_{i=0}^{p} p!/(p-i)! * ln^{p-i}(X)/(sigma-1)^{i+1}.
/// Monotonicity/convexity hold once ln(x) >= 2p+2; leading terms below that
/// threshold are summed exactly.

#include "mzv/approx.hpp"

namespace mzv {

/// Exact closed form of int_X^inf ln^p(x) x^{-sigma} dx (sigma > 1, X > 1).
double log_pow_integral(int p, double sigma, double X);

/// Certified sum_{m > N} ln^p(m) m^{-sigma}; N >= 1 integer-valued double.
Approx log_pow_tail(int p, double sigma, double N, int order = 1);

/// Certified sum_{m > N} m^{-sigma}.
Approx zeta_tail(double sigma, double N, int order = 1);

/// Certified Riemann zeta(s) for real s > 1 (direct sum + certified tail).
Approx riemann_zeta(double s);

}  // namespace mzv
