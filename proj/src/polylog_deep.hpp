#pragma once
// Deep-argument polylogarithm engine: expansions of the three xi-integrand
// factor shapes F(t) = (polylog of 1-e^{-t}) in powers of eps = e^{-t},
//
//   F(t) = sum_{j=0}^{J} p_j(t) eps^j  +  R(t),
//
// with polynomial coefficients p_j.  The p_j are generated exactly (up to
// float rounding) by the derivative recurrences of the polylog families; the
// j = 0 constant of each intermediate expansion is anchored numerically at
// t = kAnchorT through the power-series engine.  Alongside the explicit
// coefficients every Factor carries a certified l1-majorant for all j > J
// of the form  |p_j|_1 <= alpha * (j+1)^P, giving a rigorous remainder bound
//
//   |R(t)| <= alpha (1+t)^deg (J+2)^P eps^{J+1} / (1 - eps e^{P/(J+2)}),
//
// plus a coefficient-error budget cb*(1+t)^cd accounting for the anchored
// constants.  Valid for t >= kTmin.  Used by the xi quadrature for large t,
// where the power-series engine at z = 1-e^{-t} degrades.
#include <vector>

#include "mzv/approx.hpp"
#include "mzv/config.hpp"
#include "mzv/index.hpp"

namespace mzv::deep {

inline constexpr int kJ = 24;           ///< expansion order in eps
inline constexpr double kTmin = 3.0;    ///< evaluation domain t >= kTmin
inline constexpr double kAnchorT = 3.0; ///< anchor point for j=0 constants

/// A prebuilt expansion.  p has kJ+1 polynomials (ascending coefficients);
/// alpha/P majorize |p_j|_1 for j > kJ; deg bounds every poly degree;
/// cb*(1+t)^cd bounds the total effect of inexact anchored constants.
struct Factor {
  std::vector<std::vector<double>> p;
  double alpha = 0.0;
  int P = 0;
  int deg = 0;
  double cb = 0.0;
  int cd = 0;
};

/// Nested polylog Li_w(1-e^{-t}), w with entries >= 1 (ascending order,
/// the outermost summation variable carries the argument power).
Factor build_nested(const Index& w, const EvalConfig& cfg);

/// Product of single polylogs  prod_i Li_{k_i}(1-e^{-t}).
Factor build_product(const Index& singles, const EvalConfig& cfg);

/// Independent-variable polylog with total weight: heads k_1..k_n and tail
/// exponent c on the sum of the variables (c >= 0; c = 0 is the product).
Factor build_with_tail(const Index& heads, int tail, const EvalConfig& cfg);

/// Evaluate with certified error.  Requires t >= kTmin.
Approx eval(const Factor& f, double t);

/// Growth data for semiaxis tail bounds: |F(t)| <= bound_coeff(f,T)*(1+t)^
/// poly_degree(f) for all t >= T (T >= kTmin).
int poly_degree(const Factor& f);
double bound_coeff(const Factor& f, double T);

}  // namespace mzv::deep
