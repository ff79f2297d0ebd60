#include "mzv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

constexpr int kMaxPanels = 4096;

struct Rule {
  std::vector<double> x, w;
};

/// Gauss-Legendre nodes/weights on [-1,1]: Newton iteration on P_n from the
/// three-term recurrence, Chebyshev starting guesses.
Rule legendre_rule(int n) {
  Rule r;
  r.x.resize(static_cast<size_t>(n));
  r.w.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 =
            ((2.0 * k - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[static_cast<size_t>(i)] = x;
    r.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const Rule& rule7() {
  static const Rule r = legendre_rule(7);
  return r;
}
const Rule& rule15() {
  static const Rule r = legendre_rule(15);
  return r;
}

struct Panel {
  double lo = 0.0, hi = 0.0;
  double value = 0.0;  ///< 15-point estimate
  double rule = 0.0;   ///< Gauss-pair error estimate (shrinks on bisection)
  double samp = 0.0;   ///< integrated sample bounds + roundoff (irreducible)
  bool operator<(const Panel& o) const { return rule < o.rule; }
};

Panel eval_panel(const std::function<Approx(double)>& f, double lo, double hi,
                 bool& truncated) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  const Rule &r7 = rule7(), &r15 = rule15();
  double v15 = 0.0, e15 = 0.0, v7 = 0.0;
  for (size_t i = 0; i < r15.x.size(); ++i) {
    const Approx a = f(c + h * r15.x[i]);
    v15 += r15.w[i] * a.value;
    e15 += r15.w[i] * a.err;
    truncated = truncated || a.truncated;
  }
  for (size_t i = 0; i < r7.x.size(); ++i) {
    const Approx a = f(c + h * r7.x[i]);
    v7 += r7.w[i] * a.value;
    truncated = truncated || a.truncated;
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = v15 * h;
  p.rule = 3.0 * std::abs(v15 - v7) * h;
  p.samp = e15 * h + std::abs(p.value) * 64.0 * 1.2e-16;
  return p;
}

/// Upper bound for int_T^inf C t^p e^{-t} dt.
double tail_bound(double C, double p, double T) {
  if (C == 0.0) return 0.0;
  if (p <= 0.0) return C * std::pow(T, p) * std::exp(-T);
  if (!(p + 1.0 < T))
    fail(Errc::internal, "integrate_semiaxis: tail power too large for T");
  return C * std::pow(T + 1.0, p) * std::exp(-T) / (1.0 - p / (T + 1.0));
}

}  // namespace

Approx integrate_semiaxis(const std::function<Approx(double)>& f,
                          const SemiAxisShape& shape, const EvalConfig& cfg) {
  cfg.validate();
  if (!(shape.head_pow > -1.0))
    fail(Errc::domain, "integrate_semiaxis: endpoint exponent must be > -1");
  if (!(shape.tail_coeff >= 0.0) || !std::isfinite(shape.tail_coeff) ||
      !std::isfinite(shape.tail_pow))
    fail(Errc::domain, "integrate_semiaxis: bad tail envelope");

  const double target = cfg.quad_target;

  // Truncation point: start at the configured T, grow until the tail bound
  // is negligible against the target (or the cap).
  double T = std::max(cfg.trunc_T, 8.0);
  while (T < 500.0 &&
         (shape.tail_pow + 1.0 >= T ||
          tail_bound(shape.tail_coeff, shape.tail_pow, T) > 0.125 * target))
    T += 8.0;
  const double btail = tail_bound(shape.tail_coeff, shape.tail_pow, T);

  // Endpoint stub (0, a]: |f| <~ c t^alpha integrated exactly, with slack
  // for the non-power part of the integrand.  The endpoint is pulled toward
  // zero until the stub bound is negligible against the target.
  const double alpha = shape.head_pow;
  double a = 1.0 / 64.0;
  {
    const Approx f0 = f(a);
    const double c0 = (std::abs(f0.value) + f0.err) / std::pow(a, alpha);
    if (c0 > 0.0) {
      const double want = (alpha + 1.0) * target / (24.0 * c0);
      a = std::clamp(std::pow(want, 1.0 / (alpha + 1.0)), 1e-13, a);
    }
  }
  const Approx fa = f(a);
  const double head_c = (std::abs(fa.value) + fa.err) / std::pow(a, alpha);
  const double bstub =
      1.5 * head_c * std::pow(a, alpha + 1.0) / (alpha + 1.0);

  // Initial panels: geometric doubling a -> 3, unit width 3 -> T.
  bool truncated = false;
  std::priority_queue<Panel> queue;
  double rule_total = 0.0, samp_total = 0.0;
  int npanels = 0;
  auto push = [&](double plo, double phi) {
    Panel p = eval_panel(f, plo, phi, truncated);
    rule_total += p.rule;
    samp_total += p.samp;
    ++npanels;
    queue.push(std::move(p));
  };
  double lo = a;
  while (lo < 3.0) {
    const double hi = std::min(lo * 2.0, 3.0);
    push(lo, hi);
    lo = hi;
  }
  while (lo < T) {
    const double hi = std::min(lo + 1.0, T);
    push(lo, hi);
    lo = hi;
  }

  // Adaptive refinement: bisect the panel with the worst rule estimate.
  // Stops when the target is met, when the remaining estimate is dominated
  // by the samples' own (irreducible) bounds, or at the panel budget.
  while (npanels < kMaxPanels && rule_total + samp_total > target &&
         rule_total > 0.1 * samp_total) {
    Panel worst = queue.top();
    queue.pop();
    rule_total -= worst.rule;
    samp_total -= worst.samp;
    --npanels;
    const double mid = 0.5 * (worst.lo + worst.hi);
    push(worst.lo, mid);
    push(mid, worst.hi);
  }
  if (rule_total + samp_total > target && rule_total > 0.1 * samp_total)
    truncated = true;  // stopped by the panel budget, bound left coarse

  // Deterministic final accumulation in axis order.
  std::vector<Panel> panels;
  panels.reserve(static_cast<size_t>(npanels));
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  double value = 0.0, comp = 0.0, est = 0.0;
  for (const Panel& p : panels) {
    const double s = value + p.value;
    comp += (std::abs(value) >= std::abs(p.value)) ? (value - s) + p.value
                                                   : (p.value - s) + value;
    value = s;
    est += p.rule + p.samp;
  }
  value += comp;

  // Endpoint pieces: half value / half error when the sign is known.
  const double ends = bstub + btail;
  if (shape.nonneg)
    return Approx(value + 0.5 * ends, est + 0.5 * ends, truncated);
  return Approx(value, est + ends, truncated);
}

}  // namespace mzv
