#pragma once
/// @file quadrature.hpp
/// @brief Real Gamma function and certified adaptive quadrature over the
///        positive semi-axis.
///
/// The integrator works on (0, infinity) split as
///   (0, a]   — endpoint stub, bounded analytically from the known power
///              behavior |f(t)| <~ c * t^{head_pow} near 0;
///   [a, T]   — adaptive Gauss-Legendre panels (7/15-point pair), worst
///              panel bisected until the error estimate meets the target;
///   [T, inf) — tail, bounded by the caller-supplied envelope
///              |f(t)| <= tail_coeff * t^{tail_pow} * e^{-t}.
/// Stub and tail contribute half their bound as value and half as error for
/// a nonnegative integrand (the full bound as error otherwise).  Panel error
/// estimates use the Gauss pair difference, so the middle section is a
/// high-confidence estimate rather than a proof; the endpoint pieces are
/// honest bounds.

#include <functional>

#include "mzv/approx.hpp"
#include "mzv/config.hpp"

namespace mzv {

/// Gamma(x), x > 0.  Factorial product at integer x, Lanczos approximation
/// otherwise (relative error claim 5e-13 on [0.5, 60]).
Approx gamma_fn(double x);

/// Pochhammer ratio Gamma(s + j) / Gamma(s) = s (s+1) ... (s+j-1), j >= 0,
/// as an exact product (no Gamma evaluations).
Approx gamma_ratio(double s, int j);

/// Reciprocal with interval propagation; requires |v| - err > 0.
Approx approx_inv(const Approx& a);

/// Endpoint behavior of a semi-axis integrand (see file banner).
struct SemiAxisShape {
  double head_pow = 0.0;    ///< alpha: |f(t)| ~ t^alpha as t -> 0+, alpha > -1
  double tail_coeff = 0.0;  ///< C in |f(t)| <= C t^p e^{-t} for t >= trunc_T
  double tail_pow = 0.0;    ///< p (>= 0)
  bool nonneg = true;       ///< integrand known nonnegative on the axis
};

/// Certified integral of f over (0, infinity).  `f` must return a certified
/// sample; its error bounds are integrated into the result.  The truncation
/// point starts at cfg.trunc_T and grows until the tail bound is negligible
/// against cfg.quad_target (capped at 500).  Sets `truncated` when the panel
/// budget runs out before the estimate meets the target.
Approx integrate_semiaxis(const std::function<Approx(double)>& f,
                          const SemiAxisShape& shape,
                          const EvalConfig& cfg = {});

}  // namespace mzv
