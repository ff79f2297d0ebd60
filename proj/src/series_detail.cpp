#include "series_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mzv/errors.hpp"
#include "mzv/fftconv.hpp"
#include "mzv/kernels.hpp"
#include "mzv/tails.hpp"

namespace mzv::sdetail {

namespace {
constexpr double kGamma = 0.57721566490153286061;  // Euler-Mascheroni
}

Approx harmonic(double n) {
  if (n < 0.5) return Approx::exact(0.0);
  if (n <= 256.5) {
    double s = 0.0;
    for (long long m = 1; m <= static_cast<long long>(n + 0.5); ++m)
      s += 1.0 / static_cast<double>(m);
    return Approx(s, s * 1e-14);
  }
  const double v =
      std::log(n) + kGamma + 1.0 / (2.0 * n) - 1.0 / (12.0 * n * n);
  return Approx(v, 1.0 / (120.0 * n * n * n * n) + v * 1e-15);
}

double one_plus_logpow_hi(int a, double sigma, double X) {
  if (!(sigma > 1.0)) fail(Errc::divergent, "series: tail exponent <= 1");
  if (X < 3.0) fail(Errc::internal, "series: log-power tail needs X >= 3");
  Approx t = log_pow_tail(a, sigma, X, 1);
  // (1+ln m)^a <= (2 ln m)^a for m >= 3
  return std::ldexp(t.value + t.err, a);
}

double NA::mass() const {
  if (v.empty()) return 0.0;
  return kernels::ops().sum(v.data(), v.size()) +
         noise * static_cast<double>(v.size());
}

NA conv_na(const NA& a, const NA& b, std::size_t clip) {
  if (a.v.empty() || b.v.empty()) return {};
  double fft_noise = 0.0;
  NA out;
  out.v = conv_full(a.v, b.v, &fft_noise);
  if (out.v.size() > clip) out.v.resize(clip);
  const double ma = kernels::ops().sum(a.v.data(), a.v.size());
  const double mb = kernels::ops().sum(b.v.data(), b.v.size());
  out.noise = fft_noise + a.noise * (std::abs(mb) + 1.0) +
              b.noise * (std::abs(ma) + 1.0) +
              a.noise * b.noise * static_cast<double>(b.v.size());
  return out;
}

NA delta_na() { return NA{{1.0}, 0.0}; }

double Head::tail_mass_hi(double X, double delta) const {
  const double sigma = envS + delta;
  if (!(sigma > 1.0)) return std::numeric_limits<double>::infinity();
  if (singleton) {
    Approx t = zeta_tail(sigma, X, 1);
    return t.value + t.err;
  }
  return envC * one_plus_logpow_hi(envA, sigma, X);
}

Head build_head(const Index& block, long long HZ) {
  Head h;
  h.w.assign(static_cast<size_t>(HZ) + 1, 0.0);
  if (block.size() == 1) {
    if (block[0] < 1) fail(Errc::domain, "series: group entries must be >= 1");
    h.singleton = true;
    h.s = block[0];
    kernels::ops().pow_fill(h.w.data() + 1, 1.0, static_cast<size_t>(HZ), h.s);
    h.wnoise = 3e-16;
    h.envC = 1.0;
    h.envS = h.s;
    h.envA = 0;
    return h;
  }
  h.singleton = false;
  const int p = static_cast<int>(block.size());
  std::vector<double> pw(static_cast<size_t>(HZ) + 1, 0.0);
  std::vector<double> prefix(static_cast<size_t>(HZ) + 1, 1.0);
  // prefix holds P_j on [0..HZ] after level j; P_0 == 1 (empty inner product)
  double envC = 1.0;
  int envZ = 0, envA = 0;
  for (int j = 0; j + 1 < p; ++j) {
    const int sj = block[static_cast<size_t>(j)];
    if (sj < 1) fail(Errc::domain, "series: group entries must be >= 1");
    kernels::ops().pow_fill(pw.data() + 1, 1.0, static_cast<size_t>(HZ),
                            double(sj));
    double run = 0.0, comp = 0.0, prev_p = prefix[0];
    for (long long m = 1; m <= HZ; ++m) {
      const double a_jm = pw[static_cast<size_t>(m)] * prev_p;
      prev_p = prefix[static_cast<size_t>(m)];
      const double t = run + a_jm;
      comp += (std::abs(run) >= std::abs(a_jm)) ? (run - t) + a_jm
                                                : (a_jm - t) + run;
      run = t;
      prefix[static_cast<size_t>(m)] = run + comp;
    }
    prefix[0] = 0.0;
    // envelope step: P_j(m) <= envC m^{envZ} (1+ln m)^{envA}
    const int rho = sj - envZ;
    if (rho > 1) {
      double headsum = 0.0;
      for (int m = 1; m <= 64; ++m)
        headsum += std::pow(1.0 + std::log(double(m)), envA) *
                   std::pow(double(m), -double(rho));
      envC *= headsum + one_plus_logpow_hi(envA, rho, 64.0);
      envZ = 0;
      envA = 0;
    } else if (rho == 1) {
      envA += 1;
      envZ = 0;
    } else {
      envC *= std::pow(2.0, 1 - rho) / (1.0 - rho);
      envZ = 1 - rho;
    }
  }
  const int sp = block.back();
  if (sp < 1) fail(Errc::domain, "series: group entries must be >= 1");
  kernels::ops().pow_fill(pw.data() + 1, 1.0, static_cast<size_t>(HZ),
                          double(sp));
  for (long long m = 1; m <= HZ; ++m)
    h.w[static_cast<size_t>(m)] =
        pw[static_cast<size_t>(m)] * prefix[static_cast<size_t>(m) - 1];
  h.wnoise = 1e-14 * p;
  h.envC = envC;
  h.envS = sp - envZ;
  h.envA = envA;
  if (!(h.envS >= 1.0))
    fail(Errc::internal, "series: head envelope underflow");
  return h;
}

Chain build_chain(const std::vector<double>& E, long long HZ) {
  const int Q = static_cast<int>(E.size());
  std::vector<double> e(static_cast<size_t>(Q));
  e[static_cast<size_t>(Q - 1)] = E.back();
  for (int u = Q - 2; u >= 0; --u)
    e[static_cast<size_t>(u)] =
        E[static_cast<size_t>(u)] + e[static_cast<size_t>(u + 1)] - 1.0;
  for (int u = 1; u < Q; ++u)
    if (!(e[static_cast<size_t>(u)] > 1.0))
      fail(Errc::divergent, "series: chain suffix excess must exceed 1");
  // e[0] == 0 is admissible only as a single-level chain with exponent 0
  // (weight identically 1); convergence is then carried by the heads alone
  // and the caller values the outer zone directly.
  if (!(e[0] >= 0.0))
    fail(Errc::divergent, "series: chain total excess must be nonnegative");

  Chain c;
  c.e1 = e[0];
  const size_t n = static_cast<size_t>(HZ) + 1;
  std::vector<double> mid(n, 0.0), half(n, 0.0);
  kernels::ops().pow_fill(mid.data() + 1, 1.0, n - 1, E.back());
  for (size_t t = 1; t < n; ++t) half[t] = 3e-16 * mid[t];
  double kp = 1.0, km = 1.0;
  for (int u = Q - 2; u >= 0; --u) {
    const double eu1 = e[static_cast<size_t>(u + 1)];
    // model tail of level u+1 beyond HZ
    const double tail_hi = kp * std::pow(double(HZ), 1.0 - eu1) / (eu1 - 1.0);
    const double tail_lo =
        km * std::pow(double(HZ) + 1.0, 1.0 - eu1) / (eu1 - 1.0);
    std::vector<double> nmid(n, 0.0), nhalf(n, 0.0);
    std::vector<double> pwu(n, 0.0);
    kernels::ops().pow_fill(pwu.data() + 1, 1.0, n - 1,
                            E[static_cast<size_t>(u)]);
    double run = 0.5 * (tail_hi + tail_lo), comp = 0.0;
    double run_h = 0.5 * (tail_hi - tail_lo);
    nmid[static_cast<size_t>(HZ)] = pwu[static_cast<size_t>(HZ)] * run;
    nhalf[static_cast<size_t>(HZ)] = pwu[static_cast<size_t>(HZ)] * run_h;
    for (long long T = HZ - 1; T >= 1; --T) {
      const double x = mid[static_cast<size_t>(T + 1)];
      const double t = run + x;
      comp += (std::abs(run) >= std::abs(x)) ? (run - t) + x : (x - t) + run;
      run = t;
      run_h += half[static_cast<size_t>(T + 1)];
      const double suf = run + comp;
      const double pwT = pwu[static_cast<size_t>(T)];
      nmid[static_cast<size_t>(T)] = pwT * suf;
      nhalf[static_cast<size_t>(T)] = pwT * (run_h + 4e-16 * std::abs(suf));
    }
    mid = std::move(nmid);
    half = std::move(nhalf);
    km = km * std::pow(1.0 + 1.0 / double(HZ), 1.0 - eu1) / (eu1 - 1.0);
    kp = kp / (eu1 - 1.0);
  }
  c.kplus = kp;
  c.kminus = km;
  c.sum_mid = kernels::ops().sum(mid.data(), n);
  c.sum_half =
      kernels::ops().sum(half.data(), n) + 1e-15 * std::abs(c.sum_mid);
  c.mid = std::move(mid);
  c.half = std::move(half);
  return c;
}

std::vector<TailTerm> absorb_head(const std::vector<TailTerm>& terms,
                                  const Head& h, double L) {
  std::vector<TailTerm> out;
  for (const TailTerm& t : terms) {
    const double grow = std::pow(1.7, t.p);  // (1+ln 2Y)^p <= 1.7^p (1+ln Y)^p
    if (h.envS > 1.0) {
      // piece b <= Y: full over-L mass times the Y-part of the term
      out.push_back({t.c * grow * h.tail_mass_hi(L, 0.0), t.e, t.p});
    } else {
      // envS == 1: partial mass up to Y is <= envC (1+ln Y)^{envA+1}
      out.push_back({t.c * grow * h.envC, t.e, t.p + h.envA + 1});
    }
    // piece b > Y: fold the decay of b into the exponent
    const double sigma = h.envS + t.e;
    if (!(sigma > 1.0)) fail(Errc::divergent, "series: pair tail divergent");
    const int pp = h.envA + t.p;
    if ((sigma - 1.0) * std::log(L) < 2.0 * pp)
      fail(Errc::internal, "series: symbolic tail needs a larger cut");
    out.push_back({t.c * grow * h.envC * std::ldexp(2.0 / (sigma - 1.0), pp),
                   t.e + h.envS - 1.0, pp});
  }
  return out;
}

Approx pair_outer_P(double X, double L) {
  if (!(X >= 2.0 * L + 2.0))
    fail(Errc::internal, "series: pair outer window too narrow");
  Approx lp = log_pow_tail(1, 2.0, X, 2);  // sum_{U>X} U^{-2} ln U
  Approx z2 = zeta_tail(2.0, X, 2);
  Approx z3 = zeta_tail(3.0, X, 2);
  Approx HL = harmonic(L);
  // H_{U-L-1} = ln U + ln(1-(L+1)/U) + gamma + corr(U-L-1), corr in (0,1/2n]
  const double ymax = (L + 1.0) / X;
  if (!(ymax <= 0.5))
    fail(Errc::internal, "series: pair outer window too narrow");
  // ln(1-y) in [-y(1+2y), -y] for 0 < y <= 1/2
  const double z3lo = std::max(0.0, z3.value - z3.err);
  const double z3hi = z3.value + z3.err;
  const double lo3 = -(L + 1.0) * (1.0 + 2.0 * ymax) * z3hi;
  const double hi3 = -(L + 1.0) * z3lo;
  Approx ln1m(0.5 * (lo3 + hi3), 0.5 * (hi3 - lo3));
  const double corr_hi = 0.5 / (X - L - 1.0) * (z2.value + z2.err);
  Approx s = lp + z2.scaled(kGamma - HL.value) + ln1m;
  s = s.widened(HL.err * (z2.value + z2.err) + corr_hi);
  return s.scaled(2.0);
}

Approx one_head_outer_inner(double HZ, double Sp) {
  if (Sp < 0.5) return zeta_tail(2.0, HZ, 2);
  Approx d = harmonic(HZ) - harmonic(HZ - Sp);
  return d.scaled(1.0 / Sp);
}

}  // namespace mzv::sdetail
