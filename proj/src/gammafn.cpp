#include "mzv/quadrature.hpp"

#include <cmath>

#include "mzv/errors.hpp"

// Lanczos approximation, g = 7, 9 coefficients (the classic double-precision
// set).  Relative accuracy ~1e-14 across [0.5, 60]; the claimed bound 5e-13
// leaves margin and is checked against reflection/recurrence oracles in the
// tests.

namespace mzv {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_half_plane(double x) {
  // valid for x >= 0.5
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + double(i));
  const double t = x + kLanczosG - 0.5;
  return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

Approx gamma_fn(double x) {
  if (!(x > 0.0)) fail(Errc::domain, "gamma_fn: argument must be positive");
  if (x > 171.5) fail(Errc::domain, "gamma_fn: double overflow");
  if (x == std::floor(x)) {
    // (x-1)! as a running product; exact until the product leaves the
    // 2^53 integer range, ~n ulps of drift afterwards.
    double v = 1.0;
    const int n = static_cast<int>(x);
    for (int i = 2; i < n; ++i) v *= double(i);
    return Approx(v, n <= 19 ? 0.0 : v * double(n) * 2.3e-16);
  }
  double v;
  if (x >= 0.5) {
    v = lanczos_half_plane(x);
  } else {
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), 0 < x < 0.5
    v = M_PI / (std::sin(M_PI * x) * lanczos_half_plane(1.0 - x));
  }
  return Approx(v, std::abs(v) * 5e-13);
}

Approx gamma_ratio(double s, int j) {
  if (j < 0) fail(Errc::domain, "gamma_ratio: j must be >= 0");
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= s + double(i);
  return Approx(v, std::abs(v) * double(j + 1) * 2.3e-16);
}

Approx approx_inv(const Approx& a) {
  const double lo = std::abs(a.value) - a.err;
  if (!(lo > 0.0)) fail(Errc::internal, "approx_inv: interval touches zero");
  const double v = 1.0 / a.value;
  const double e = a.err / (std::abs(a.value) * lo);
  return Approx(v, e + std::abs(v) * 2.3e-16, a.truncated);
}

}  // namespace mzv
