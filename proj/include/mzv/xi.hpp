#pragma once
/// @file xi.hpp
/// @brief The three xi families (Mellin-type integrals of polylogarithm
///        factors) and the f(t; j, k) decomposition terms.
///
/// All three families share the shape
///   xi(...; s) = (1/Gamma(s)) * int_0^inf t^{s-1} P(t) / (e^t - 1) dt
/// with the polylog factor P(t) evaluated at z = 1 - e^{-t}:
///   AK      — nested multi-polylog Li_k(z);
///   ITO     — product of single polylogs prod_i Li_{k_i}(z);
///   GEN_ITO — head index plus chained total, Li_{(k; k_{n+1})}(z).
/// P is evaluated by the power-series engine below t = 3 and by the
/// exponential-series engine (polylog_deep) above, both certified.

#include "mzv/approx.hpp"
#include "mzv/config.hpp"
#include "mzv/index.hpp"

namespace mzv {

enum class XiFamily {
  AK,      ///< nested index
  ITO,     ///< independent single exponents (possibly empty)
  GEN_ITO  ///< head exponents + chained final exponent kn1 >= 1
};

struct XiSpec {
  XiFamily family = XiFamily::ITO;
  Index k;      ///< AK: nested index; ITO: singles; GEN_ITO: heads
  int kn1 = 0;  ///< GEN_ITO only: final chained exponent
  double s = 2.0;

  void validate() const;
};

/// Certified xi value.  Supported arguments: real s >= 1 (and s > 1 for the
/// empty ITO index, where the value is the Riemann zeta itself).
Approx eval_xi(const XiSpec& spec, const EvalConfig& cfg = {});

/// Engine selector for cross-validation of the two polylog routes.
enum class PolylogRoute { AUTO, SERIES, DEEP };

/// The polylog factor P(t) of the xi integrand, certified.  AUTO switches
/// engines at t = 3; SERIES/DEEP force one side (DEEP requires t >= 3).
Approx xi_polylog_factor(const XiSpec& spec, double t,
                         PolylogRoute route = PolylogRoute::AUTO,
                         const EvalConfig& cfg = {});

/// f(t; j, k) for k >= 2, 0 <= j <= 2k-2: the j-th term of the decomposition
/// of Li_k(1 - e^{-t}) into polylogarithms of e^{-t},
///   j < k-1:  (-1)^j zeta(k-j) Li_{{1}^j}(e^{-t})
///   j = k-1:  (-1)^{k-1} t Li_{{1}^{k-1}}(e^{-t})
///   j > k-1:  (-1)^{k-1} Li_w(e^{-t}),  w = ({1}^{2k-2-j}, 2, {1}^{j-k}).
Approx eval_f_term(double t, int j, int k, const EvalConfig& cfg = {});

}  // namespace mzv
