#include "polylog_deep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"

// Construction rules (z = 1-e^{-t}, eps = e^{-t}, dz/dt = eps):
//
//   d/dt Li_{w,k}(z) = Li_{w,k-1}(z) / (e^t - 1)    (k >= 2)    [chain]
//   d/dt Li_{w,1}(z) = Li_{w}(z)                                [lift]
//   d/dt Li_{k;c}(z) = Li_{k;c-1}(z) / (e^t - 1)    (c >= 1)    [chain]
//   Li_{k;0}(z)      = prod_i Li_{k_i}(z)                       [product]
//
// with 1/(e^t - 1) = sum_{i>=1} eps^i.  Writing F = sum_j p_j(t) eps^j turns
// each rule into per-j linear ODEs  p_j' - j p_j = q_j  whose bounded
// polynomial solution is  p_j = -sum_d q_j^{(d)} / j^{d+1}.  The j = 0
// equation fixes p_0 up to a constant, anchored against the power-series
// engine at t = kAnchorT.
//
// Error model.  A Factor represents the exact function F_rep generated by the
// stored coefficients; `alpha`/`P` majorize its untracked coefficients
// (j > kJ), and `cb`/`cd` bound |F_true - F_rep| <= cb*(1+t)^cd on
// t >= kTmin.  The anchor error and per-op rounding enter cb at the step that
// creates them and are then transported through the same ODEs:
//
//   chain:    D' = D_in/(e^t-1)  =>  cb = cb_in * I(cd_in) + anchor,
//             I(d) = integral_{kTmin}^{inf} (1+u)^d/(e^u-1) du (closed form);
//   lift:     D' = D_in          =>  cb = cb_in/(cd_in+1) + anchor, cd+1;
//   product:  D = D_a*B + A*D_b + D_a*D_b with |A|,|B| bounded by the
//             factors' own coefficient mass.

namespace mzv::deep {

namespace {

using Poly = std::vector<double>;

const double kEpsAnchor = std::exp(-kAnchorT);
const double kZAnchor = -std::expm1(-kAnchorT);

double pl1(const Poly& a) {
  double s = 0.0;
  for (double c : a) s += std::abs(c);
  return s;
}

void padd_into(Poly& a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

Poly pderiv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = double(i) * a[i];
  return d;
}

Poly pmult(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

double peval(const Poly& a, double t) {
  double v = 0.0;
  for (size_t i = a.size(); i-- > 0;) v = v * t + a[i];
  return v;
}

/// Bounded polynomial solution of p' - j p = q, j >= 1.
Poly solve_ode(const Poly& q, int j) {
  Poly p;
  Poly d = q;
  double jp = double(j);
  while (!d.empty()) {
    Poly term = d;
    for (double& c : term) c /= -jp;
    padd_into(p, term);
    d = pderiv(d);
    jp *= double(j);
  }
  return p;
}

double Mj(const Factor& f, int j) { return pl1(f.p[static_cast<size_t>(j)]); }

double sum_MJ(const Factor& f) {
  double s = 0.0;
  for (int j = 0; j <= kJ; ++j) s += Mj(f, j);
  return s;
}

/// Tail-coefficient mass: sum_{j>kJ} alpha (j+1)^P eps^j.
double tail_majorant(const Factor& f, double eps) {
  const double grow = eps * std::exp(double(f.P) / double(kJ + 2));
  if (!(grow < 0.5)) fail(Errc::internal, "deep: eps too large for majorant");
  return f.alpha * std::pow(double(kJ + 2), f.P) * std::pow(eps, kJ + 1) /
         (1.0 - grow);
}

/// Coefficient mass at eps: |F_rep(t)| <= flat_mass(eps(t)) * (1+t)^deg, and
/// the mass only shrinks as t grows.
double flat_mass(const Factor& f, double eps) {
  double s = 0.0, ep = 1.0;
  for (int j = 0; j <= kJ; ++j) {
    s += Mj(f, j) * ep;
    ep *= eps;
  }
  return s + tail_majorant(f, eps);
}

/// Partial sum sum_{j<=kJ} p_j(t) eps^j of the stored coefficients.
double eval_sum(const Factor& f, double t) {
  const double eps = std::exp(-t);
  double v = 0.0, ep = 1.0;
  for (int j = 0; j <= kJ; ++j) {
    v += peval(f.p[static_cast<size_t>(j)], t) * ep;
    ep *= eps;
  }
  return v;
}

/// integral_{kTmin}^{inf} (1+u)^d / (e^u - 1) du
///   = sum_{i>=1} e^{-i kTmin} sum_{m<=d} [d!/(d-m)!] (1+kTmin)^{d-m}/i^{m+1}.
double kernel_mass(int d) {
  const double base = 1.0 + kTmin;
  double total = 0.0;
  for (int i = 1; i <= 200; ++i) {
    double inner = 0.0, ff = 1.0, pw = std::pow(base, d), ip = double(i);
    for (int m = 0; m <= d; ++m) {
      inner += ff * pw / ip;
      ff *= double(d - m);
      pw /= base;
      ip *= double(i);
    }
    total += std::exp(-double(i) * kTmin) * inner;
  }
  return total * (1.0 + 1e-9);
}

/// Rounding charge for freshly computed coefficients, expressed as a
/// coefficient-mass perturbation (its growth is covered by cd >= deg).
double round_charge(const Factor& f) {
  return flat_mass(f, kEpsAnchor) * double(kJ + f.deg + 16) * 1.2e-16;
}

Factor make_one() {
  Factor f;
  f.p.assign(kJ + 1, Poly{});
  f.p[0] = {1.0};
  return f;
}

/// Li_1(1 - e^{-t}) = t, exactly.
Factor make_li1() {
  Factor f;
  f.p.assign(kJ + 1, Poly{});
  f.p[0] = {0.0, 1.0};
  f.deg = 1;
  f.cd = 1;
  return f;
}

/// One ODE step.  cumulative=true divides by (e^t - 1): q_j = sum_{j'<j} a_j'.
/// cumulative=false is the plain lift: q_j = a_j, p_0 = antiderivative(a_0).
Factor ode_step(const Factor& a, bool cumulative) {
  Factor b;
  b.p.assign(kJ + 1, Poly{});
  Poly run;
  for (int j = 1; j <= kJ; ++j) {
    if (cumulative) {
      padd_into(run, a.p[static_cast<size_t>(j - 1)]);
      b.p[static_cast<size_t>(j)] = solve_ode(run, j);
    } else {
      b.p[static_cast<size_t>(j)] = solve_ode(a.p[static_cast<size_t>(j)], j);
    }
  }
  const int D = a.deg;
  if (kJ + 1 <= D) fail(Errc::internal, "deep: degree exceeds order");
  const double inv = 1.0 / double(kJ + 1 - D);
  if (cumulative) {
    // |q_j| <= S_J(a) + alpha (j+1)^{P+1}/(P+1); |p_j| <= |q_j|/(j - deg).
    b.alpha = (sum_MJ(a) * inv +
               a.alpha * double(kJ + 2) / double(a.P + 1) * inv) *
              (1.0 + 1e-12);
    b.deg = a.deg;
    b.cb = a.cb * kernel_mass(a.cd);
  } else {
    b.alpha = a.alpha * inv * (1.0 + 1e-12);
    const Poly& a0 = a.p[0];
    Poly p0(a0.size() + 1, 0.0);
    for (size_t i = 0; i < a0.size(); ++i) p0[i + 1] = a0[i] / double(i + 1);
    b.p[0] = std::move(p0);
    b.deg = a.deg + 1;
    b.cb = a.cb / double(a.cd + 1);
  }
  b.P = a.P;
  b.cd = std::max(b.deg, cumulative ? 0 : a.cd + 1);
  b.cb += round_charge(b);
  return b;
}

Factor product(const Factor& a, const Factor& b) {
  Factor c;
  c.p.assign(kJ + 1, Poly{});
  for (int j = 0; j <= kJ; ++j)
    for (int i = 0; i <= j; ++i)
      padd_into(c.p[static_cast<size_t>(j)],
                pmult(a.p[static_cast<size_t>(i)],
                      b.p[static_cast<size_t>(j - i)]));
  double ahat = a.alpha, bhat = b.alpha;
  for (int j = 0; j <= kJ; ++j) {
    ahat = std::max(ahat, Mj(a, j));
    bhat = std::max(bhat, Mj(b, j));
  }
  c.alpha = ahat * bhat * (1.0 + 1e-12);
  c.P = a.P + b.P + 1;
  c.deg = a.deg + b.deg;
  const double va = flat_mass(a, kEpsAnchor), vb = flat_mass(b, kEpsAnchor);
  c.cb = a.cb * vb + b.cb * va + a.cb * b.cb;
  c.cd = std::max({a.cd + b.deg, b.cd + a.deg, c.deg});
  c.cb += round_charge(c);
  return c;
}

/// Fix the j=0 constant so the stored partial sum matches `target` at
/// t = kAnchorT; charge the anchor error, the representation tail there, and
/// the partial-sum rounding into cb.
void anchor(Factor& f, const Approx& target) {
  const double partial = eval_sum(f, kAnchorT);
  const double c = target.value - partial;
  if (f.p[0].empty()) f.p[0] = {0.0};
  f.p[0][0] += c;
  const double grow = std::pow(1.0 + kAnchorT, f.deg);
  const double round =
      (sum_MJ(f) + std::abs(c)) * grow * double(kJ + f.deg + 8) * 1.2e-16;
  f.cb += target.err + tail_majorant(f, kEpsAnchor) * grow + round;
}

EvalConfig anchor_cfg(const EvalConfig& cfg) {
  EvalConfig a = cfg;
  a.tol = 1e-14;
  a.cutoff = 0;
  return a;
}

Factor build_nested_memo(const Index& w, const EvalConfig& cfg,
                         std::map<Index, Factor>& memo) {
  if (w.empty()) return make_one();
  if (w.size() == 1 && w[0] == 1) return make_li1();
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Factor f;
  if (w.back() == 1) {
    Index head(w.begin(), w.end() - 1);
    f = ode_step(build_nested_memo(head, cfg, memo), false);
  } else {
    Index dec = w;
    --dec.back();
    f = ode_step(build_nested_memo(dec, cfg, memo), true);
  }
  anchor(f, eval_polylog_multi(w, kZAnchor, anchor_cfg(cfg)));
  memo.emplace(w, f);
  return f;
}

}  // namespace

Factor build_nested(const Index& w, const EvalConfig& cfg) {
  for (int e : w)
    if (e < 1) fail(Errc::domain, "deep: nested entries must be >= 1");
  std::map<Index, Factor> memo;
  return build_nested_memo(w, cfg, memo);
}

Factor build_product(const Index& singles, const EvalConfig& cfg) {
  Factor f = make_one();
  std::map<Index, Factor> memo;
  for (int k : singles) {
    if (k < 1) fail(Errc::domain, "deep: polylog order must be >= 1");
    f = product(f, build_nested_memo(Index{k}, cfg, memo));
  }
  return f;
}

Factor build_with_tail(const Index& heads, int tail, const EvalConfig& cfg) {
  if (heads.empty()) fail(Errc::domain, "deep: tail form needs a head index");
  if (tail < 0) fail(Errc::domain, "deep: negative tail exponent");
  Factor f = build_product(heads, cfg);
  for (int c = 1; c <= tail; ++c) {
    f = ode_step(f, true);
    anchor(f, eval_polylog(PolylogKind::WITH_TAIL, heads, kZAnchor, c, {},
                           anchor_cfg(cfg)));
  }
  return f;
}

Approx eval(const Factor& f, double t) {
  if (!(t >= kTmin)) fail(Errc::domain, "deep: t below engine domain");
  const double eps = std::exp(-t);
  const double grow = std::pow(1.0 + t, f.deg);
  double v = 0.0, comp = 0.0, ep = 1.0, mass = 0.0;
  for (int j = 0; j <= kJ; ++j) {
    const double term = peval(f.p[static_cast<size_t>(j)], t) * ep;
    const double s = v + term;
    comp += (std::abs(v) >= std::abs(term)) ? (v - s) + term : (term - s) + v;
    v = s;
    mass += Mj(f, j) * ep;
    ep *= eps;
  }
  const double value = v + comp;
  const double err = tail_majorant(f, eps) * grow +
                     f.cb * std::pow(1.0 + t, f.cd) +
                     mass * grow * double(kJ + f.deg + 8) * 1.2e-16;
  return Approx(value, err);
}

int poly_degree(const Factor& f) { return std::max(f.deg, f.cd); }

double bound_coeff(const Factor& f, double T) {
  if (!(T >= kTmin)) fail(Errc::domain, "deep: T below engine domain");
  return flat_mass(f, std::exp(-T)) + f.cb;
}

}  // namespace mzv::deep
