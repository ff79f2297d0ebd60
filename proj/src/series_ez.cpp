#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "mzv/convergence.hpp"
#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"
#include "mzv/word.hpp"

namespace mzv {

namespace {

// ---- Two-sided geometric-split engine (admissible indices) ----------------
//
// Encode the index as a word and use the symmetric splitting identity
//   S(w) = sum_{c=0}^{|w|} I(1/2; tau(w[0:c])) * I(1/2; w[c:])
// where tau = reverse+complement and I(z; u) is the generating series of u
// evaluated at z.  Both factors are power series evaluated at 1/2, so every
// piece converges geometrically regardless of admissibility of the pieces;
// only the full word must be admissible.  Truncation at M coefficients is
// certified by the envelope g_n <= (1+ln n)^d (d = letters processed):
// an 'x' step divides coefficients by n, and a 'y' step maps an envelope
// (1+ln n)^a into a prefix sum bounded by (1+ln n)^{a+1}, then divides by n.

constexpr int kCoeffs = 128;

/// Power series of I(z; w) truncated at kCoeffs, evaluated at z = 1/2,
/// with certified truncation and rounding error.
Approx series_at_half(const Word& w) {
  static std::map<Word, Approx> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }

  // Coefficients f[0..M]; the constant 1 participates in the first prefix
  // sum only (all later iterates vanish at 0).
  std::vector<double> f(kCoeffs + 1, 0.0);
  f[0] = 1.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 'y') {
      // g_n = (f_0 + ... + f_{n-1}) / n
      double run = 0.0, comp = 0.0;
      std::vector<double> g(kCoeffs + 1, 0.0);
      for (int n = 1; n <= kCoeffs; ++n) {
        const double x = f[static_cast<size_t>(n) - 1];
        const double t = run + x;
        comp += (std::abs(run) >= std::abs(x)) ? (run - t) + x : (x - t) + run;
        run = t;
        g[static_cast<size_t>(n)] = (run + comp) / n;
      }
      f = std::move(g);
    } else {
      // g_n = f_n / n
      for (int n = kCoeffs; n >= 1; --n)
        f[static_cast<size_t>(n)] = f[static_cast<size_t>(n)] / n;
      f[0] = 0.0;
    }
  }

  Approx out = Approx::exact(1.0);
  if (!w.empty()) {
    double sum = 0.0;  // Horner from the top coefficient at z = 1/2
    for (int n = kCoeffs; n >= 1; --n)
      sum = 0.5 * (sum + f[static_cast<size_t>(n)]);
    const int d = static_cast<int>(w.size());
    // Tail: sum_{n>M} (1+ln n)^d 2^{-n} <= 2 (1+ln M)^d 2^{-M} for M >= 8d.
    const double tail =
        2.0 * std::pow(1.0 + std::log(static_cast<double>(kCoeffs)), d) *
        std::ldexp(1.0, -kCoeffs);
    const double round = std::abs(sum) * 2.5e-16 * (3.0 * d + 10.0);
    out = Approx(sum, tail + round);
  }
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(w, out);
  return out;
}

Approx ez_split_engine(const Index& k) {
  const Word w = index_to_word(k);
  const int m = static_cast<int>(w.size());
  if (m > 8 * kCoeffs)
    fail(Errc::budget, "ez: weight too large for the split engine");
  Approx total = Approx::exact(0.0);
  for (int c = 0; c <= m; ++c) {
    const Approx left = series_at_half(dual_word(w.substr(0, static_cast<size_t>(c))));
    const Approx right = series_at_half(w.substr(static_cast<size_t>(c)));
    total = total + left * right;
  }
  return total;
}

// ---- Direct nested summation (convergent indices with zero entries) -------
//
// DP over the cumulative arrays A_j(m) = m^{-s_j} sum_{m'<m} A_{j-1}(m'),
// plus an analytic envelope C m^z (1+ln m)^a carried through the levels to
// certify the outer tail.

struct Envelope {
  double C = 1.0;
  int z = 0;  ///< power of m
  int a = 0;  ///< power of (1+ln m)
};

Approx ez_direct(const Index& k, const EvalConfig& cfg) {
  const int n = depth(k);
  long long N = cfg.cutoff > 0 ? cfg.cutoff : cfg.budget / std::max(1, n);
  N = std::clamp<long long>(N, 1024, 4'000'000);

  // DP with compensated prefix sums.
  std::vector<double> prefix(static_cast<size_t>(N) + 1, 0.0);
  for (long long m = 0; m <= N; ++m) prefix[static_cast<size_t>(m)] = (m >= 1);
  // prefix currently holds A_0 = 1 for m>=1; fold levels in turn.
  for (int j = 0; j < n; ++j) {
    // A_j(m) = m^{-s_j} * P_{j-1}(m-1); P_j = prefix sums of A_j.
    double run = 0.0, comp = 0.0, prev_p = 0.0;
    for (long long m = 1; m <= N; ++m) {
      const double a_jm = std::pow(static_cast<double>(m), -double(k[static_cast<size_t>(j)])) *
                          (j == 0 ? 1.0 : prev_p);
      prev_p = prefix[static_cast<size_t>(m)];  // P_{j-1}(m) before overwrite
      const double t = run + a_jm;
      comp += (std::abs(run) >= std::abs(a_jm)) ? (run - t) + a_jm
                                                : (a_jm - t) + run;
      run = t;
      prefix[static_cast<size_t>(m)] = run + comp;
    }
    prefix[0] = 0.0;
  }
  const double value = prefix[static_cast<size_t>(N)];

  // Envelope recursion for the tail beyond N: entering level j the inner
  // value is bounded by C m^z (1+ln m)^a, starting from the empty product.
  Envelope env{1.0, 0, 0};
  for (int j = 0; j + 1 < n; ++j) {
    // Current envelope bounds the inner value entering level j (product of
    // prefix sums); fold A_j(m) <= C m^{z - s_j} (1+ln m)^a, then prefix-sum.
    const int rho = k[static_cast<size_t>(j)] - env.z;
    if (rho > 1) {
      // sum_m (1+ln m)^a m^{-rho} converges: constant envelope.
      double head = 0.0;
      for (int m = 1; m <= 64; ++m)
        head += std::pow(1.0 + std::log(double(m)), env.a) *
                std::pow(double(m), -double(rho));
      Approx t = log_pow_tail(env.a, rho, 64.0, 1);
      // (1+ln m)^a <= (1 + ln m)^a; log_pow_tail uses ln^a: widen by 2^a.
      env = {env.C * (head + std::ldexp(t.value + t.err, env.a)), 0, 0};
    } else if (rho == 1) {
      // sum_{m'<=m} (1+ln m')^a / m' <= (1+ln m)^{a+1}
      env = {env.C, 0, env.a + 1};
    } else {
      // sum_{m'<=m} m'^{-rho} <= (2m)^{1-rho}/(1-rho)
      env = {env.C * std::pow(2.0, 1 - rho) / (1.0 - rho), 1 - rho, env.a};
    }
  }
  const double sigma = double(k.back()) - env.z;
  if (sigma <= 1.0)
    fail(Errc::internal, "ez: tail envelope too coarse for this index");
  Approx tail = log_pow_tail(env.a, sigma, static_cast<double>(N), 1);
  const double tail_hi = env.C * std::ldexp(tail.value + tail.err, env.a);
  const double round = std::abs(value) * 2.5e-16 * (4.0 * n + 8.0);
  return Approx(value + 0.5 * tail_hi, 0.5 * tail_hi + round);
}

}  // namespace

Approx eval_zeta_ez(const Index& k, const EvalConfig& cfg) {
  cfg.validate();
  auto conv = check_ez(k);
  if (!conv) fail(Errc::divergent, "ez: " + conv.failed_condition);
  if (admissible(k)) return ez_split_engine(k);
  return ez_direct(k, cfg);
}

}  // namespace mzv
