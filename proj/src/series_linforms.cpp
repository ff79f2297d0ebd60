#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"

// Generic linear-forms evaluator:
//
//   zeta(s; A) = sum_{m_1..m_r >= 1} prod_i (sum_j a_ij m_j)^{-s_i}.
//
// Convergence is certified constructively before anything is summed: find
// per-row split weights lambda_{ij} >= 0 (supported on a_ij > 0, summing to
// 1 in each row).  Weighted AM-GM gives
//
//   sum_j a_ij m_j  >=  c_i prod_j m_j^{lambda_ij},
//   c_i = prod_{lambda>0} (a_ij/lambda_ij)^{lambda_ij},
//
// so the integrand is dominated by  (prod_i c_i^{-s_i}) prod_j m_j^{-sigma_j}
// with sigma_j = sum_i s_i lambda_ij.  If weights with every sigma_j > 1
// exist the series converges and the dominating product yields a certified
// truncation tail; if the search cannot produce such weights the evaluator
// refuses rather than report an uncertified number.

namespace mzv {

namespace {

double pow_int_or_real(double base, double s) {
  const long long si = static_cast<long long>(s);
  if (static_cast<double>(si) == s && si >= 0 && si <= 64) {
    double acc = 1.0, b = base;
    long long e = si;
    while (e > 0) {
      if (e & 1) acc *= b;
      b *= b;
      e >>= 1;
    }
    return 1.0 / acc;
  }
  return std::pow(base, -s);
}

struct Certificate {
  bool ok = false;
  std::vector<double> sigma;   // per-column exponents, all > 1 when ok
  double cbound = 1.0;         // prod_i c_i^{-s_i}
};

/// Search split weights maximizing min_j sigma_j (Frank-Wolfe style steps
/// toward the currently weakest column), then verify the result.
Certificate certify(const std::vector<std::vector<double>>& A,
                    const std::vector<double>& s) {
  const size_t n = A.size(), r = A[0].size();
  std::vector<std::vector<double>> lam(n, std::vector<double>(r, 0.0));
  for (size_t i = 0; i < n; ++i) {
    int sup = 0;
    for (size_t j = 0; j < r; ++j)
      if (A[i][j] > 0.0) ++sup;
    for (size_t j = 0; j < r; ++j)
      if (A[i][j] > 0.0) lam[i][j] = 1.0 / sup;
  }
  auto sigma_of = [&](const std::vector<std::vector<double>>& l) {
    std::vector<double> sg(r, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < r; ++j) sg[j] += s[i] * l[i][j];
    return sg;
  };
  std::vector<std::vector<double>> best = lam;
  double best_min = -1.0;
  for (int t = 0; t < 400; ++t) {
    std::vector<double> sg = sigma_of(lam);
    const size_t jmin = static_cast<size_t>(
        std::min_element(sg.begin(), sg.end()) - sg.begin());
    if (sg[jmin] > best_min) {
      best_min = sg[jmin];
      best = lam;
    }
    const double eta = 1.0 / (2.0 + t);
    for (size_t i = 0; i < n; ++i) {
      if (!(A[i][jmin] > 0.0) || s[i] <= 0.0) continue;
      for (size_t j = 0; j < r; ++j) lam[i][j] *= (1.0 - eta);
      lam[i][jmin] += eta;
    }
  }
  Certificate cert;
  cert.sigma = sigma_of(best);
  for (double sg : cert.sigma)
    if (!(sg > 1.0 + 1e-9)) return cert;  // not certifiable
  cert.ok = true;
  double logc = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < r; ++j)
      if (best[i][j] > 1e-12)
        logc += s[i] * best[i][j] * std::log(A[i][j] / best[i][j]);
  cert.cbound = std::exp(-logc) * (1.0 + 1e-12);
  return cert;
}

}  // namespace

Approx eval_linear_forms_zeta(const std::vector<std::vector<double>>& A,
                              const std::vector<double>& s,
                              const EvalConfig& cfg) {
  cfg.validate();
  const size_t n = A.size();
  if (n == 0 || s.size() != n)
    fail(Errc::domain, "linforms: need one exponent per row");
  const size_t r = A[0].size();
  if (r == 0 || r > 4)
    fail(Errc::domain, "linforms: 1 to 4 summation variables supported");
  for (const auto& row : A) {
    if (row.size() != r) fail(Errc::domain, "linforms: ragged matrix");
    double rowsum = 0.0;
    for (double a : row) {
      if (!(a >= 0.0)) fail(Errc::domain, "linforms: negative coefficient");
      rowsum += a;
    }
    if (!(rowsum > 0.0)) fail(Errc::domain, "linforms: zero row");
  }
  for (double si : s)
    if (!(si >= 0.0)) fail(Errc::domain, "linforms: negative exponent");

  Certificate cert = certify(A, s);
  if (!cert.ok)
    fail(Errc::divergent,
         "linforms: could not certify convergence (no split weights give "
         "every column exponent > 1)");

  long long N =
      cfg.cutoff > 0
          ? std::max<long long>(cfg.cutoff, 16)
          : static_cast<long long>(
                std::pow(double(cfg.budget), 1.0 / double(r)));
  N = std::clamp<long long>(N, 32, 2'000'000);

  // certified tail: union bound over "variable j exceeds N"
  double tail_hi = 0.0;
  {
    std::vector<double> zhi(r), thi(r);
    for (size_t j = 0; j < r; ++j) {
      Approx zj = riemann_zeta(cert.sigma[j]);
      zhi[j] = zj.value + zj.err;
      Approx tj = zeta_tail(cert.sigma[j], double(N), 1);
      thi[j] = tj.value + tj.err;
    }
    for (size_t j = 0; j < r; ++j) {
      double term = cert.cbound * thi[j];
      for (size_t j2 = 0; j2 < r; ++j2)
        if (j2 != j) term *= zhi[j2];
      tail_hi += term;
    }
  }

  // direct nested summation over the box [1,N]^r with incremental forms
  std::vector<double> form(n, 0.0);
  double run = 0.0, comp = 0.0;
  std::function<void(size_t)> walk = [&](size_t j) {
    if (j == r) {
      double term = 1.0;
      for (size_t i = 0; i < n; ++i) term *= pow_int_or_real(form[i], s[i]);
      const double t = run + term;
      comp += (std::abs(run) >= std::abs(term)) ? (run - t) + term
                                                : (term - t) + run;
      run = t;
      return;
    }
    std::vector<double> saved = form;
    for (long long m = 1; m <= N; ++m) {
      for (size_t i = 0; i < n; ++i) form[i] = saved[i] + double(m) * A[i][j];
      walk(j + 1);
    }
    form = saved;
  };
  walk(0);
  const double value = run + comp;
  const double round =
      std::abs(value) * 2.5e-16 * (4.0 * double(n) + 8.0) +
      std::abs(value) * 1e-16 * double(r);
  return Approx(value, tail_hi + round);
}

}  // namespace mzv
