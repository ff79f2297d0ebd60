#include "mzv/xi.hpp"

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"

namespace mzv {

Approx eval_f_term(double t, int j, int k, const EvalConfig& cfg) {
  if (!(t > 0.0)) fail(Errc::domain, "eval_f_term: t must be positive");
  if (k < 2) fail(Errc::domain, "eval_f_term: k must be >= 2");
  if (j < 0 || j > 2 * k - 2)
    fail(Errc::domain, "eval_f_term: j out of [0, 2k-2]");

  // j = 0 is the pure-constant term.
  if (j == 0) return riemann_zeta(double(k));

  const ItoCoeff c = ito_coefficients({j}, Index{k});
  Approx v = Approx::exact(1.0);
  for (int arg : c.zeta_factors) v = v * riemann_zeta(double(arg));
  if (c.t_power > 0) {
    const double tp = std::pow(t, double(c.t_power));
    v = v * Approx(tp, std::abs(tp) * double(c.t_power + 1) * 2.3e-16);
  }
  const double z = std::exp(-t);
  for (const Index& w : c.lis) {
    if (w.empty()) continue;
    v = v * eval_polylog_multi(w, z, cfg);
  }
  return v.scaled(double(c.sign));
}

}  // namespace mzv
