#include <algorithm>
#include <cmath>
#include <limits>

#include "mzv/convergence.hpp"
#include "mzv/errors.hpp"
#include "mzv/kernels.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"
#include "series_detail.hpp"

// Evaluator for the independent-heads families (flat heads, chained final
// blocks, grouped leading blocks).  Write S for the sum of the leading-group
// maxima; the series factors through S:
//
//     value = sum_S  W(S) * G_1(S)
//
// with W the additive convolution of the per-group weight functions and G_1
// the chain of suffix sums built downward from the final block.  Singleton
// (0)-groups are folded into the chain as leading exponent-0 levels (summing
// over a weight-one head is exactly one more suffix sum).
//
// The head variables are unbounded, so the value is decomposed *exactly* at
// a cut L as
//
//   value = box + sum_i A_i + sum_{i<j} B_ij + R3,
//
//   box   = all heads <= L               (complete convolution),
//   A_i   = head i > L, others <= L      (one extra convolution, dense to HZ),
//   B_ij  = heads i,j > L, others <= L   (dense to HZ),
//   R3    = three or more heads > L      (certified upper bound only).
//
// Beyond the dense horizon HZ the chain is sandwiched by its power model
// kappa^- T^{-e1} <= G_1(T) <= kappa^+ T^{-e1} (kappa^+ valid for all
// T >= 1, kappa^- for T >= HZ), and the A/B remainders beyond HZ are either
// valued through the model (closed harmonic forms for the unit-exponent
// cases, which carry real mass) or bounded and charged to err.

namespace mzv {

namespace {

using sdetail::absorb_head;
using sdetail::build_chain;
using sdetail::build_head;
using sdetail::Chain;
using sdetail::conv_na;
using sdetail::delta_na;
using sdetail::Head;
using sdetail::NA;
using sdetail::one_head_outer_inner;
using sdetail::one_plus_logpow_hi;
using sdetail::pair_outer_P;
using sdetail::TailTerm;

struct Problem {
  std::vector<Index> blocks;  // non-zero leading groups
  int z0 = 0;                 // folded singleton (0) groups
  std::vector<double> fin;    // final-block exponents
};

Approx attempt_eval(const Problem& pb, long long L) {
  const int r = static_cast<int>(pb.blocks.size());
  const long long HZ = (r + 1 > 3 ? r + 1 : 3) * L + 64;

  std::vector<double> E(static_cast<size_t>(pb.z0), 0.0);
  E.insert(E.end(), pb.fin.begin(), pb.fin.end());
  Chain ch = build_chain(E, HZ);

  if (r == 0) {
    // Pure chain: value = sum_{T>=1} G_1(T) + model tail beyond HZ.
    if (!(ch.e1 > 1.0))
      fail(Errc::divergent, "conv: headless chain needs excess > 1");
    const double tl =
        ch.kminus * std::pow(double(HZ) + 1.0, 1.0 - ch.e1) / (ch.e1 - 1.0);
    const double th =
        ch.kplus * std::pow(double(HZ), 1.0 - ch.e1) / (ch.e1 - 1.0);
    return Approx(ch.sum_mid + 0.5 * (tl + th),
                  ch.sum_half + 0.5 * (th - tl));
  }

  double value = 0.0, err = 0.0;

  std::vector<Head> heads;
  heads.reserve(static_cast<size_t>(r));
  for (const auto& b : pb.blocks) heads.push_back(build_head(b, HZ));

  auto trunc_low = [&](const Head& h) {  // m in [1, L]
    NA out;
    out.v.assign(h.w.begin(), h.w.begin() + L + 1);
    out.noise = h.wnoise;
    return out;
  };
  auto trunc_high = [&](const Head& h) {  // m in (L, HZ]
    NA out;
    out.v.assign(static_cast<size_t>(HZ) + 1, 0.0);
    std::copy(h.w.begin() + L + 1, h.w.end(), out.v.begin() + L + 1);
    out.noise = h.wnoise;
    return out;
  };

  std::vector<NA> low;
  low.reserve(static_cast<size_t>(r));
  for (const auto& h : heads) low.push_back(trunc_low(h));

  std::vector<NA> pre(static_cast<size_t>(r) + 1),
      suf(static_cast<size_t>(r) + 1);
  pre[0] = delta_na();
  for (int i = 0; i < r; ++i)
    pre[static_cast<size_t>(i + 1)] =
        conv_na(pre[static_cast<size_t>(i)], low[static_cast<size_t>(i)],
                static_cast<size_t>(HZ) + 1);
  suf[static_cast<size_t>(r)] = delta_na();
  for (int i = r - 1; i >= 0; --i)
    suf[static_cast<size_t>(i)] =
        conv_na(suf[static_cast<size_t>(i + 1)], low[static_cast<size_t>(i)],
                static_cast<size_t>(HZ) + 1);

  auto dot_g1 = [&](const NA& a) {
    const size_t nn = std::min(a.v.size(), ch.mid.size());
    const double v = kernels::ops().dot(a.v.data(), ch.mid.data(), nn);
    const double e = kernels::ops().dot(a.v.data(), ch.half.data(), nn) +
                     a.noise * (ch.sum_mid + 1.0) + std::abs(v) * 1e-14;
    value += v;
    err += std::abs(e);
  };

  // box: all heads <= L
  dot_g1(pre[static_cast<size_t>(r)]);

  // A_i: head i beyond L, others <= L
  for (int i = 0; i < r; ++i) {
    NA wnot =
        conv_na(pre[static_cast<size_t>(i)], suf[static_cast<size_t>(i + 1)],
                static_cast<size_t>(HZ) + 1);
    NA ci = conv_na(wnot, trunc_high(heads[static_cast<size_t>(i)]),
                    static_cast<size_t>(HZ) + 1);
    dot_g1(ci);

    // outer zone T > HZ
    const Head& h = heads[static_cast<size_t>(i)];
    const double mass_not = wnot.mass();
    const bool unit_head = h.singleton && std::abs(h.s - 1.0) < 1e-12;
    if (unit_head && std::abs(ch.e1 - 1.0) < 1e-12) {
      // valued: sum_{S'} W(S') (1/S')(H_HZ - H_{HZ-S'}) against kappa+/-
      Approx acc = Approx::exact(0.0);
      for (size_t sp = 0; sp < wnot.v.size(); ++sp) {
        const double wv = wnot.v[sp];
        if (wv == 0.0) continue;
        acc += one_head_outer_inner(double(HZ), double(sp)).scaled(wv);
      }
      const double kmid = 0.5 * (ch.kplus + ch.kminus);
      const double khalf = 0.5 * (ch.kplus - ch.kminus);
      value += kmid * acc.value;
      err += ch.kplus * acc.err + khalf * std::abs(acc.value) +
             wnot.noise * double(wnot.v.size()) / double(L);
    } else if (ch.e1 == 0.0 && h.singleton) {
      // single-level chain with exponent 0: the weight is identically 1,
      // so the outer zone is a plain zeta tail of the exceeding head
      Approx acc = Approx::exact(0.0);
      for (size_t sp = 0; sp < wnot.v.size(); ++sp) {
        const double wv = wnot.v[sp];
        if (wv == 0.0) continue;
        acc += zeta_tail(h.s, double(HZ) - double(sp), 2).scaled(wv);
      }
      value += acc.value;
      err += acc.err + wnot.noise * double(wnot.v.size()) / double(L);
    } else {
      // bounded: kappa+ * mass * sum_{u>2L} u^{-e1} env(u), charged to err
      double bound;
      if (h.singleton) {
        Approx zt = zeta_tail(ch.e1 + h.s, 2.0 * double(L), 1);
        bound = ch.kplus * mass_not * (zt.value + zt.err);
      } else {
        bound = ch.kplus * mass_not * h.envC *
                one_plus_logpow_hi(h.envA, ch.e1 + h.envS, 2.0 * double(L));
      }
      value += 0.5 * bound;
      err += 0.5 * bound;
    }
  }

  // B_ij: heads i and j beyond L, others <= L
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      NA wnot = delta_na();
      for (int k = 0; k < r; ++k)
        if (k != i && k != j)
          wnot = conv_na(wnot, low[static_cast<size_t>(k)],
                         static_cast<size_t>(HZ) + 1);
      NA bc = conv_na(conv_na(wnot, trunc_high(heads[static_cast<size_t>(i)]),
                              static_cast<size_t>(HZ) + 1),
                      trunc_high(heads[static_cast<size_t>(j)]),
                      static_cast<size_t>(HZ) + 1);
      dot_g1(bc);

      const Head& hi = heads[static_cast<size_t>(i)];
      const Head& hj = heads[static_cast<size_t>(j)];
      const bool both_unit = hi.singleton && hj.singleton &&
                             std::abs(hi.s - 1.0) < 1e-12 &&
                             std::abs(hj.s - 1.0) < 1e-12;
      if (both_unit && std::abs(ch.e1 - 1.0) < 1e-12) {
        // valued via P(X), the others' offset split at S0
        const double S0 = 128.0;
        double mass_small = 0.0, mass_rest = 0.0;
        for (size_t sp = 0; sp < wnot.v.size(); ++sp)
          (double(sp) <= S0 ? mass_small : mass_rest) += wnot.v[sp];
        mass_small +=
            wnot.noise * std::min<double>(double(wnot.v.size()), S0 + 1.0);
        mass_rest += wnot.noise * double(wnot.v.size());
        Approx pHZ = pair_outer_P(double(HZ), double(L));
        Approx pS0 = pair_outer_P(double(HZ) - S0, double(L));
        const double lo =
            (pHZ.value - pHZ.err) * double(HZ) / (double(HZ) + S0);
        const double hi_b = pS0.value + pS0.err;
        const double kmid = 0.5 * (ch.kplus + ch.kminus);
        const double khalf = 0.5 * (ch.kplus - ch.kminus);
        const double mid = 0.5 * (lo + hi_b);
        value += kmid * mass_small * mid;
        err += mass_small * (ch.kplus * 0.5 * (hi_b - lo) + khalf * mid);
        if (mass_rest > 0.0) {
          Approx pR =
              pair_outer_P(double(HZ) - double(r - 2) * double(L), double(L));
          const double rest_hi = ch.kplus * mass_rest * (pR.value + pR.err);
          value += 0.5 * rest_hi;
          err += 0.5 * rest_hi;
        }
      } else {
        // bounded: absorb head j into the chain model, then sum head i
        std::vector<TailTerm> terms{{ch.kplus * wnot.mass(), ch.e1, 0}};
        terms = absorb_head(terms, hj, double(L));
        double bound = 0.0;
        for (const TailTerm& t : terms) {
          const double sigma = hi.envS + t.e;
          if (!(sigma > 1.0))
            fail(Errc::divergent, "conv: pair tail divergent");
          bound += t.c * hi.envC *
                   one_plus_logpow_hi(hi.envA + t.p, sigma, double(L));
        }
        value += 0.5 * bound;
        err += 0.5 * bound;
      }
    }
  }

  // R3: three or more heads beyond L.  Weighted AM-GM gives
  // (sum m)^{-e1} <= prod m^{-e1/K} over the K exceeding heads.
  if (r >= 3) {
    double r3 = 0.0;
    for (int mask = 0; mask < (1 << r); ++mask) {
      const int K = __builtin_popcount(static_cast<unsigned>(mask));
      if (K < 3) continue;
      double term = ch.kplus;
      for (int k = 0; k < r; ++k) {
        if (mask & (1 << k))
          term *= heads[static_cast<size_t>(k)].tail_mass_hi(double(L),
                                                             ch.e1 / K);
        else
          term *= low[static_cast<size_t>(k)].mass();
      }
      r3 += term;
    }
    value += 0.5 * r3;
    err += 0.5 * r3;
  }

  return Approx(value, err);
}

Approx conv_engine(const Problem& pb, const EvalConfig& cfg) {
  auto guard = check_chain_guard(pb.fin);
  if (!guard) fail(Errc::divergent, "conv: " + guard.failed_condition);
  const int r = static_cast<int>(pb.blocks.size());
  if (r > 8) fail(Errc::budget, "conv: too many leading groups");

  // Work proxy per attempt: array passes of length ~HZ.
  auto work = [&](long long L) {
    return (static_cast<long long>(r) * r + 3 * r + 4) * (r + 2) * L;
  };
  long long L =
      cfg.cutoff > 0
          ? std::max<long long>(static_cast<long long>(cfg.cutoff), 64)
          : 8192;
  if (cfg.cutoff <= 0)
    while (L > 128 && work(L) > cfg.budget) L /= 2;
  const double target = std::max(cfg.tol, 1e-13);

  Approx best(0.0, std::numeric_limits<double>::max());
  for (;;) {
    Approx a = attempt_eval(pb, L);
    if (a.err < best.err) best = a;
    if (best.err <= target) break;
    const long long nextL = L * 4;
    if (cfg.cutoff > 0 || work(nextL) > cfg.budget ||
        static_cast<long long>(r + 2) * nextL > 3'000'000) {
      best.truncated = true;
      break;
    }
    L = nextL;
  }
  return best;
}

Problem make_problem(const std::vector<Index>& blocks,
                     const std::vector<double>& fin) {
  Problem pb;
  pb.fin = fin;
  for (const auto& b : blocks) {
    if (b.empty()) fail(Errc::domain, "conv: empty leading group");
    if (b == Index{0}) {
      ++pb.z0;
      continue;
    }
    for (int e : b)
      if (e < 0) fail(Errc::domain, "conv: negative group entry");
    pb.blocks.push_back(b);
  }
  for (double f : fin)
    if (!(f >= 0.0)) fail(Errc::domain, "conv: negative final exponent");
  if (pb.fin.empty()) fail(Errc::domain, "conv: empty final block");
  return pb;
}

}  // namespace

Approx eval_zeta_mt(const Index& heads, double tail, const EvalConfig& cfg) {
  cfg.validate();
  auto conv = check_mt(heads, tail);
  if (!conv) fail(Errc::divergent, "mt: " + conv.failed_condition);
  std::vector<Index> blocks;
  blocks.reserve(heads.size());
  for (int h : heads) blocks.push_back({h});
  return conv_engine(make_problem(blocks, {tail}), cfg);
}

Approx eval_zeta_miyagawa(const Index& heads,
                          const std::vector<double>& final_block,
                          const EvalConfig& cfg) {
  cfg.validate();
  auto conv = check_miyagawa(heads, final_block);
  if (!conv) fail(Errc::divergent, "chained: " + conv.failed_condition);
  std::vector<Index> blocks;
  blocks.reserve(heads.size());
  for (int h : heads) blocks.push_back({h});
  return conv_engine(make_problem(blocks, final_block), cfg);
}

Approx eval_zeta_gmt(const std::vector<Index>& blocks,
                     const std::vector<double>& final_block,
                     const EvalConfig& cfg) {
  cfg.validate();
  auto conv = check_gmt(blocks, final_block);
  if (!conv) fail(Errc::divergent, "gmt: " + conv.failed_condition);
  return conv_engine(make_problem(blocks, final_block), cfg);
}

Approx eval_zeta_gmt(const GmtIndex& k, const EvalConfig& cfg) {
  return eval_zeta_gmt(
      k.blocks,
      std::vector<double>(k.final_block.begin(), k.final_block.end()), cfg);
}

}  // namespace mzv
