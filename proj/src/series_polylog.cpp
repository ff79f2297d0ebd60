#include <algorithm>
#include <cmath>
#include <limits>

#include "mzv/errors.hpp"
#include "mzv/kernels.hpp"
#include "mzv/series.hpp"
#include "series_detail.hpp"

// z-damped series evaluators.  Every kind reduces to
//
//     value = sum_{m <= M} z^{damper(m)} * (weight arrays)  +  certified tail
//
// where the geometric factor z^m makes the tail collapse like z^M, so the
// truncation point M stays small for z away from 1.  The routines refuse
// z >= 0.999: production callers switch to the exponential-argument engine
// well before that (the integrands use the series only where z <= ~0.93),
// and certifying the series this close to 1 would need huge M for no gain.

namespace mzv {

namespace {

using sdetail::build_chain;
using sdetail::build_head;
using sdetail::Chain;
using sdetail::conv_na;
using sdetail::delta_na;
using sdetail::Head;
using sdetail::NA;

constexpr double kZMax = 0.999;

void check_z(double z) {
  if (!(z >= 0.0) || z >= 1.0)
    fail(Errc::domain, "polylog: z must lie in [0, 1)");
  if (z > kZMax)
    fail(Errc::domain,
         "polylog: z too close to 1 for the series route; evaluate through "
         "the exponential-argument engine instead");
}

/// zpow[m] = z^m on [0..M] by running product (relative drift <= m ulps,
/// charged by the callers as a blanket M*eps*|value| term).
std::vector<double> fill_zpow(double z, long long M) {
  std::vector<double> zp(static_cast<size_t>(M) + 1);
  zp[0] = 1.0;
  for (long long m = 1; m <= M; ++m)
    zp[static_cast<size_t>(m)] = zp[static_cast<size_t>(m) - 1] * z;
  return zp;
}

/// Upper bound on sum_{m>M} z^m m^{p} (1+ln m)^{a} * C m^{-drop}:
/// absorb the slow factors into the geometric ratio.  Returns +inf when the
/// absorbed ratio does not stay below 1 (caller must grow M).
double geometric_tail_hi(double z, long long M, double C, int p, int a,
                         double drop) {
  const double M1 = double(M) + 1.0;
  const double beta = (double(p) + double(a) / (1.0 + std::log(M1))) / M1;
  const double zp = z * std::exp(beta);
  if (!(zp < 1.0 - 1e-6)) return std::numeric_limits<double>::infinity();
  const double zM1 = std::exp(M1 * std::log(z)) * (1.0 + 1e-12);
  return C * std::pow(M1, double(p) - drop) *
         std::pow(1.0 + std::log(M1), double(a)) * zM1 / (1.0 - zp) *
         (1.0 + 1e-12);
}

long long start_M(const EvalConfig& cfg) {
  return cfg.cutoff > 0 ? std::max<long long>(cfg.cutoff, 64) : 256;
}

long long cap_M(const EvalConfig& cfg, int streams) {
  const long long by_budget =
      cfg.budget / std::max(1, streams) > 2048
          ? static_cast<long long>(cfg.budget) / std::max(1, streams)
          : 2048;
  return std::min<long long>(by_budget, 2'000'000);
}

// ---- nested kind -------------------------------------------------------------

Approx polylog_multi_impl(const Index& k, double z, const EvalConfig& cfg) {
  const int n = static_cast<int>(k.size());
  if (n == 0) fail(Errc::domain, "polylog: empty index");
  for (int e : k)
    if (e < 1) fail(Errc::domain, "polylog: nested entries must be >= 1");
  if (z == 0.0) return Approx::exact(0.0);

  // envelope of the inner prefix P_{n-1}(m) <= C (1+ln m)^a (interior
  // entries are >= 1, so no m-power appears)
  double C = 1.0;
  int a = 0;
  for (int j = 0; j + 1 < n; ++j) {
    if (k[static_cast<size_t>(j)] == 1) {
      a += 1;
    } else {
      double headsum = 0.0;
      for (int m = 1; m <= 64; ++m)
        headsum += std::pow(1.0 + std::log(double(m)), a) *
                   std::pow(double(m), -double(k[static_cast<size_t>(j)]));
      C *= headsum + sdetail::one_plus_logpow_hi(
                         a, double(k[static_cast<size_t>(j)]), 64.0);
      a = 0;
    }
  }

  const double target = std::max(cfg.tol, 1e-15);
  const long long Mcap = cap_M(cfg, n);
  long long M = start_M(cfg);
  for (;;) {
    // w(m) = m^{-k_n} P_{n-1}(m-1) by iterated prefix sums
    std::vector<double> prefix(static_cast<size_t>(M) + 1, 1.0);
    std::vector<double> pw(static_cast<size_t>(M) + 1, 0.0);
    for (int j = 0; j + 1 < n; ++j) {
      kernels::ops().pow_fill(pw.data() + 1, 1.0, static_cast<size_t>(M),
                              double(k[static_cast<size_t>(j)]));
      double run = 0.0, comp = 0.0, prev_p = prefix[0];
      for (long long m = 1; m <= M; ++m) {
        const double a_jm = pw[static_cast<size_t>(m)] * prev_p;
        prev_p = prefix[static_cast<size_t>(m)];
        const double t = run + a_jm;
        comp += (std::abs(run) >= std::abs(a_jm)) ? (run - t) + a_jm
                                                  : (a_jm - t) + run;
        run = t;
        prefix[static_cast<size_t>(m)] = run + comp;
      }
      prefix[0] = 0.0;
    }
    kernels::ops().pow_fill(pw.data() + 1, 1.0, static_cast<size_t>(M),
                            double(k.back()));
    std::vector<double> w(static_cast<size_t>(M) + 1, 0.0);
    for (long long m = 1; m <= M; ++m)
      w[static_cast<size_t>(m)] = pw[static_cast<size_t>(m)] *
                                  (n == 1 ? 1.0
                                          : prefix[static_cast<size_t>(m) - 1]);
    std::vector<double> zp = fill_zpow(z, M);
    const double value =
        kernels::ops().dot(zp.data(), w.data(), static_cast<size_t>(M) + 1);
    const double tail_hi =
        geometric_tail_hi(z, M, C, 0, a, double(k.back()));
    // per-entry DP noise <= 4e-15 n Pmax, summed against the geometric mass
    const double pmax = C * std::pow(1.0 + std::log(double(M) + 1.0), a);
    const double round = 1.3e-16 * double(M) * std::abs(value) +
                         4e-15 * n * pmax * (z / (1.0 - z) + 1.0);
    if (tail_hi <= target * 0.5 || M >= Mcap) {
      Approx out(value, tail_hi + round);
      out.truncated = !(tail_hi <= target * 0.5) && M >= Mcap;
      if (!std::isfinite(out.err))
        fail(Errc::budget, "polylog: tail not certified within budget");
      return out;
    }
    M *= 2;
  }
}

// ---- independent kind ----------------------------------------------------------

Approx polylog_with_tail_impl(const Index& k, int tail, double z,
                              const EvalConfig& cfg) {
  const int r = static_cast<int>(k.size());
  if (r == 0) fail(Errc::domain, "polylog: empty index");
  if (tail < 0) fail(Errc::domain, "polylog: negative total exponent");
  for (int e : k)
    if (e < 0) fail(Errc::domain, "polylog: negative entry");
  if (z == 0.0) return Approx::exact(0.0);

  const double target = std::max(cfg.tol, 1e-15);
  const long long Mcap = cap_M(cfg, 2 * r);
  long long M = start_M(cfg);
  for (;;) {
    NA W = delta_na();
    for (int i = 0; i < r; ++i) {
      NA wi;
      wi.v.assign(static_cast<size_t>(M) + 1, 0.0);
      kernels::ops().pow_fill(wi.v.data() + 1, 1.0, static_cast<size_t>(M),
                              double(k[static_cast<size_t>(i)]));
      wi.noise = 3e-16;
      W = conv_na(W, wi, static_cast<size_t>(M) + 1);
    }
    std::vector<double> zp = fill_zpow(z, M);
    std::vector<double> g(static_cast<size_t>(M) + 1, 0.0);
    kernels::ops().pow_fill(g.data() + 1, 1.0, static_cast<size_t>(M),
                            double(tail));
    for (long long m = 0; m <= M; ++m)
      g[static_cast<size_t>(m)] *= zp[static_cast<size_t>(m)];
    const double value =
        kernels::ops().dot(W.v.data(), g.data(),
                           std::min(W.v.size(), g.size()));
    // W(S) <= S^{r-1} (compositions of S into r positive parts, terms <= 1)
    const double tail_hi =
        geometric_tail_hi(z, M, 1.0, r - 1, 0, double(tail));
    const double round = (1.3e-16 * double(M)) * std::abs(value) +
                         W.noise * double(M + 1);
    if (tail_hi <= target * 0.5 || M >= Mcap) {
      Approx out(value, tail_hi + round);
      out.truncated = !(tail_hi <= target * 0.5) && M >= Mcap;
      if (!std::isfinite(out.err))
        fail(Errc::budget, "polylog: tail not certified within budget");
      return out;
    }
    M *= 2;
  }
}

// ---- block-structured kind -------------------------------------------------------

Approx polylog_gmt_impl(const std::vector<Index>& blocks, double z,
                        const EvalConfig& cfg) {
  if (blocks.size() < 2)
    fail(Errc::domain,
         "polylog: block kind needs leading groups plus a final block");
  const std::vector<Index> lead(blocks.begin(), blocks.end() - 1);
  const Index& fin = blocks.back();
  if (fin.empty()) fail(Errc::domain, "polylog: empty final block");
  std::vector<double> E(fin.begin(), fin.end());
  if (z == 0.0) return Approx::exact(0.0);

  int V = 0;  // total count of leading variables (for the crude W bound)
  for (const auto& b : lead) {
    if (b.empty()) fail(Errc::domain, "polylog: empty leading group");
    V += static_cast<int>(b.size());
  }

  const double target = std::max(cfg.tol, 1e-15);
  const long long Mcap = cap_M(cfg, 2 * static_cast<int>(blocks.size()));
  long long M = start_M(cfg);
  for (;;) {
    const long long HZm = M + 64;
    Chain ch = build_chain(E, HZm);
    NA W = delta_na();
    for (const auto& b : lead) {
      if (b.size() == 1 && b[0] == 0) {
        NA ones;  // a (0)-group: constant weight, summable thanks to z^m
        ones.v.assign(static_cast<size_t>(M) + 1, 1.0);
        ones.v[0] = 0.0;
        W = conv_na(W, ones, static_cast<size_t>(M) + 1);
      } else {
        Head h = build_head(b, M);
        NA wb;
        wb.v = std::move(h.w);
        wb.noise = h.wnoise;
        W = conv_na(W, wb, static_cast<size_t>(M) + 1);
      }
    }
    std::vector<double> zp = fill_zpow(z, M);
    std::vector<double> gmid(static_cast<size_t>(M) + 1, 0.0);
    std::vector<double> ghalf(static_cast<size_t>(M) + 1, 0.0);
    for (long long m = 0; m <= M; ++m) {
      gmid[static_cast<size_t>(m)] =
          zp[static_cast<size_t>(m)] * ch.mid[static_cast<size_t>(m)];
      ghalf[static_cast<size_t>(m)] =
          zp[static_cast<size_t>(m)] * ch.half[static_cast<size_t>(m)];
    }
    const double value = kernels::ops().dot(W.v.data(), gmid.data(),
                                            std::min(W.v.size(), gmid.size()));
    const double ehalf = kernels::ops().dot(
        W.v.data(), ghalf.data(), std::min(W.v.size(), ghalf.size()));
    // W(S) <= S^{V-1}; G_1(S) <= kplus S^{-e1} for all S >= 1
    const double tail_hi =
        geometric_tail_hi(z, M, ch.kplus, V - 1, 0, ch.e1);
    const double round = (1.3e-16 * double(M)) * std::abs(value) +
                         W.noise * (ch.sum_mid + 1.0) + std::abs(ehalf);
    if (tail_hi <= target * 0.5 || M >= Mcap) {
      Approx out(value, tail_hi + round);
      out.truncated = !(tail_hi <= target * 0.5) && M >= Mcap;
      if (!std::isfinite(out.err))
        fail(Errc::budget, "polylog: tail not certified within budget");
      return out;
    }
    M *= 2;
  }
}

}  // namespace

Approx eval_polylog(PolylogKind kind, const Index& index, double z, int tail,
                    const std::vector<Index>& blocks, const EvalConfig& cfg) {
  cfg.validate();
  check_z(z);
  switch (kind) {
    case PolylogKind::MULTI:
      return polylog_multi_impl(index, z, cfg);
    case PolylogKind::WITH_TAIL:
      return polylog_with_tail_impl(index, tail, z, cfg);
    case PolylogKind::GMT_LI:
      return polylog_gmt_impl(blocks, z, cfg);
  }
  fail(Errc::internal, "polylog: unknown kind");
}

Approx eval_polylog_multi(const Index& k, double z, const EvalConfig& cfg) {
  return eval_polylog(PolylogKind::MULTI, k, z, 0, {}, cfg);
}

}  // namespace mzv
