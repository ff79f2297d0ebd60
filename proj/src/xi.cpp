#include "mzv/xi.hpp"

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"
#include "polylog_deep.hpp"

namespace mzv {

namespace {

/// Vanishing order of the polylog factor at t = 0 (each family's factor
/// opens with z^order, z = 1 - e^{-t} ~ t).
int vanish_order(const XiSpec& spec) {
  return static_cast<int>(spec.k.size());
}

/// Power-series route: z = 1 - e^{-t} stays well inside the engine's radius
/// for t <= 3.
Approx series_factor(const XiSpec& spec, double t, const EvalConfig& cfg) {
  const double z = -std::expm1(-t);
  switch (spec.family) {
    case XiFamily::AK:
      return eval_polylog_multi(spec.k, z, cfg);
    case XiFamily::ITO: {
      Approx p = Approx::exact(1.0);
      for (int ki : spec.k) p = p * eval_polylog_multi(Index{ki}, z, cfg);
      return p;
    }
    case XiFamily::GEN_ITO:
      return eval_polylog(PolylogKind::WITH_TAIL, spec.k, z, spec.kn1, {},
                          cfg);
  }
  fail(Errc::internal, "xi: unknown family");
}

deep::Factor deep_factor(const XiSpec& spec, const EvalConfig& cfg) {
  switch (spec.family) {
    case XiFamily::AK:
      return deep::build_nested(spec.k, cfg);
    case XiFamily::ITO:
      return deep::build_product(spec.k, cfg);
    case XiFamily::GEN_ITO:
      return deep::build_with_tail(spec.k, spec.kn1, cfg);
  }
  fail(Errc::internal, "xi: unknown family");
}

}  // namespace

void XiSpec::validate() const {
  for (int e : k)
    if (e < 1) fail(Errc::domain, "xi: index entries must be >= 1");
  switch (family) {
    case XiFamily::AK:
      if (k.empty()) fail(Errc::domain, "xi: nested index must be nonempty");
      break;
    case XiFamily::ITO:
      break;
    case XiFamily::GEN_ITO:
      if (k.empty()) fail(Errc::domain, "xi: head index must be nonempty");
      if (kn1 < 1) fail(Errc::domain, "xi: final exponent must be >= 1");
      break;
  }
  if (!(s >= 1.0))
    fail(Errc::domain, "xi: s >= 1 is the supported argument range");
  if (family == XiFamily::ITO && k.empty() && !(s > 1.0))
    fail(Errc::domain, "xi: empty index needs s > 1");
}

Approx eval_xi(const XiSpec& spec, const EvalConfig& cfg) {
  spec.validate();
  cfg.validate();

  // Empty product: the integral collapses to the Riemann zeta itself.
  if (spec.family == XiFamily::ITO && spec.k.empty())
    return riemann_zeta(spec.s);

  // Exponential-series representation, built once per call; it serves the
  // t >= 3 samples and certifies the integrand envelope beyond T.
  const deep::Factor F = deep_factor(spec, cfg);
  const int pd = deep::poly_degree(F);
  const double T0 = std::max(cfg.trunc_T, 8.0);
  const double cb = deep::bound_coeff(F, T0);

  EvalConfig node_cfg = cfg;
  node_cfg.tol = std::max(cfg.quad_target * 0.02, 1e-13);

  const double s = spec.s;
  auto integrand = [&](double t) -> Approx {
    const Approx P = (t < deep::kTmin) ? series_factor(spec, t, node_cfg)
                                       : deep::eval(F, t);
    const double w = std::pow(t, s - 1.0);
    const double den = std::expm1(t);
    const double v = w * P.value / den;
    const double e = w * (P.err + std::abs(P.value) * 3e-16) / den;
    return Approx(v, e + std::abs(v) * 3e-16, P.truncated);
  };

  SemiAxisShape shape;
  shape.head_pow = s - 2.0 + double(vanish_order(spec));
  shape.tail_pow = s - 1.0 + double(pd);
  // 1/(e^t-1) <= 1.001 e^{-t} and (1+t)^pd <= e^{pd/T0} t^{pd} for t >= T0.
  shape.tail_coeff = cb * 1.06 * std::exp(double(pd) / T0);
  shape.nonneg = true;

  const Approx integral = integrate_semiaxis(integrand, shape, cfg);
  return integral * approx_inv(gamma_fn(s));
}

Approx xi_polylog_factor(const XiSpec& spec, double t, PolylogRoute route,
                         const EvalConfig& cfg) {
  for (int e : spec.k)
    if (e < 1) fail(Errc::domain, "xi: index entries must be >= 1");
  if (!(t > 0.0)) fail(Errc::domain, "xi: t must be positive");
  switch (route) {
    case PolylogRoute::SERIES:
      return series_factor(spec, t, cfg);
    case PolylogRoute::DEEP:
      return deep::eval(deep_factor(spec, cfg), t);
    case PolylogRoute::AUTO:
      return (t < deep::kTmin) ? series_factor(spec, t, cfg)
                               : deep::eval(deep_factor(spec, cfg), t);
  }
  fail(Errc::internal, "xi: unknown route");
}

}  // namespace mzv
