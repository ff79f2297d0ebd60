#pragma once
/// @file oracles.hpp
/// @brief Frozen expected values and independent brute-force reference
///        summers used by the test suite.
///
/// Policy: constants are frozen here only when they have a textbook closed
/// form (powers of pi, classical single-zeta decimals, Euler's reduction of
/// depth-two sums).  Everything else is cross-checked through an independent
/// low-tech route (direct nested loops plus a crude integral tail estimate)
/// at a correspondingly loose tolerance, so the production engines are never
/// compared against themselves.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

// ----------------------------------------------------------------------------
// Frozen closed-form constants.
// ----------------------------------------------------------------------------
inline constexpr double kPi = 3.14159265358979323846;

// Single zeta values (classical decimals).
inline constexpr double kZeta2 = 1.64493406684822643647;  // pi^2/6
inline constexpr double kZeta3 = 1.20205690315959428540;
inline constexpr double kZeta4 = 1.08232323371113819152;  // pi^4/90
inline constexpr double kZeta5 = 1.03692775514336992633;
inline constexpr double kZeta6 = 1.01734306198444913971;  // pi^6/945
inline constexpr double kZeta7 = 1.00834927738192282684;
inline constexpr double kZeta8 = 1.00407735619794433938;
inline constexpr double kZeta9 = 1.00200839282608221442;
inline constexpr double kZeta10 = 1.00099457512781808534;

// Depth >= 2 values with closed forms:
//   zeta(1,2) = zeta(3)                (Euler)
//   zeta(1,3) = zeta(4)/4
//   zeta(2,2) = pi^4/120
//   zeta(1,1,2) = zeta(4)              (dual of (4))
//   zeta(2,2,2) = pi^6/5040            (all-two family pi^{2n}/(2n+1)!)
inline constexpr double kZeta_1_2 = kZeta3;
inline constexpr double kZeta_1_3 = kZeta4 / 4.0;
inline constexpr double kZeta_2_2 = 0.81174242528335364363;
inline constexpr double kZeta_1_1_2 = kZeta4;
inline constexpr double kZeta_2_2_2 = 0.19075182412208421369;

// Mordell's classical double sum: sum 1/(m n (m+n)) = 2 zeta(3).
inline constexpr double kMT_1_1_1 = 2.0 * kZeta3;

// Dilogarithm at one half: pi^2/12 - log^2(2)/2.
inline constexpr double kLi2Half = 0.58224052646501250590;

// -log(1 - e^{-1}) = Li_1(e^{-1}).
inline constexpr double kLi1ExpM1 = 0.45867514538708189103;

// sqrt(pi) = Gamma(1/2).
inline constexpr double kSqrtPi = 1.77245385090551602730;

// ----------------------------------------------------------------------------
// Independent reference summers (deliberately low-tech).
// ----------------------------------------------------------------------------

/// Euler-Maclaurin single zeta for s > 1.  Three Bernoulli correction terms;
/// at N = 1e5 the remainder is far below 1e-13 for s >= 1.5.  Used only as a
/// test oracle.
inline double zeta_em_ref(double s, std::int64_t N = 100000) {
  double sum = 0.0;
  for (std::int64_t m = N; m >= 1; --m) sum += std::pow(double(m), -s);
  const double dN = double(N);
  double corr = std::pow(dN, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(dN, -s);
  // B2/2! s N^{-s-1}, B4/4! s(s+1)(s+2) N^{-s-3}, B6/6! ... N^{-s-5}
  const double b2 = 1.0 / 6.0, b4 = -1.0 / 30.0, b6 = 1.0 / 42.0;
  corr += b2 / 2.0 * s * std::pow(dN, -s - 1.0);
  corr += b4 / 24.0 * s * (s + 1.0) * (s + 2.0) * std::pow(dN, -s - 3.0);
  corr += b6 / 720.0 * s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
          std::pow(dN, -s - 5.0);
  return sum + corr;
}

/// Brute-force Euler-Zagier sum over 0 < m_1 < ... < m_d <= N (nested prefix
/// recursion).  No tail correction: callers must pick tolerances that absorb
/// the O(N^{1-last}) truncation themselves.
inline double ez_brute(const std::vector<int>& k, std::int64_t N) {
  const std::size_t d = k.size();
  std::vector<double> prefix(std::size_t(N) + 1, 0.0);  // prefix[m] = F(<= m)
  // innermost variable first: F_1(m) = sum_{a<=m} a^{-k_1}
  std::vector<double> cur(std::size_t(N) + 1, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    double acc = 0.0;
    for (std::int64_t m = 1; m <= N; ++m) {
      const double w = std::pow(double(m), -double(k[j]));
      const double inner = (j == 0) ? 1.0 : prefix[std::size_t(m) - 1];
      cur[std::size_t(m)] = w * inner;
      acc += cur[std::size_t(m)];
      // reuse cur as running value; prefix built after the loop
    }
    (void)acc;
    double run = 0.0;
    for (std::int64_t m = 0; m <= N; ++m) {
      run += cur[std::size_t(m)];
      prefix[std::size_t(m)] = run;
    }
  }
  return prefix[std::size_t(N)];
}

/// Brute-force Mordell-Tornheim-style sum with independent head variables and
/// one cumulative factor: sum over m_i in [1,N]^r of
///   prod m_i^{-s_i} * (m_1+...+m_r)^{-t}.
/// Implemented by grouping on the total S (additive convolution done naively),
/// so it stays O(r N^2) instead of N^r.
inline double mt_brute(const std::vector<double>& heads, double tail,
                       std::int64_t N) {
  const std::size_t r = heads.size();
  std::vector<double> w(std::size_t(N) + 1, 0.0);
  std::vector<double> conv;
  for (std::int64_t m = 1; m <= N; ++m)
    w[std::size_t(m)] = std::pow(double(m), -heads[0]);
  conv = w;
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<double> wi(std::size_t(N) + 1, 0.0);
    for (std::int64_t m = 1; m <= N; ++m)
      wi[std::size_t(m)] = std::pow(double(m), -heads[i]);
    std::vector<double> next(conv.size() + wi.size() - 1, 0.0);
    for (std::size_t a = 0; a < conv.size(); ++a) {
      if (conv[a] == 0.0) continue;
      for (std::size_t b = 0; b < wi.size(); ++b)
        next[a + b] += conv[a] * wi[b];
    }
    conv.swap(next);
  }
  double total = 0.0;
  for (std::size_t S = conv.size(); S-- > 1;)
    total += conv[S] * std::pow(double(S), -tail);
  return total;
}

/// Brute-force Miyagawa-style sum: singleton heads plus a final block applied
/// to cumulative sums S, S+x_1, S+x_1+x_2, ...  Direct loops, small caps only.
inline double miyagawa_brute(const std::vector<double>& heads,
                             const std::vector<double>& fin, std::int64_t N) {
  // group heads by total S as above
  std::vector<double> conv(1, 1.0);
  for (double s : heads) {
    std::vector<double> wi(std::size_t(N) + 1, 0.0);
    for (std::int64_t m = 1; m <= N; ++m)
      wi[std::size_t(m)] = std::pow(double(m), -s);
    std::vector<double> next(conv.size() + wi.size() - 1, 0.0);
    for (std::size_t a = 0; a < conv.size(); ++a) {
      if (conv[a] == 0.0) continue;
      for (std::size_t b = 0; b < wi.size(); ++b)
        next[a + b] += conv[a] * wi[b];
    }
    conv.swap(next);
  }
  // chain over the final block, recursively, with horizon 3N
  const std::int64_t H = 3 * N;
  std::vector<double> g(std::size_t(H) + 2, 0.0);
  // g_u(T) computed downward; start with last factor
  for (std::size_t u = fin.size(); u-- > 0;) {
    std::vector<double> nextg(std::size_t(H) + 2, 0.0);
    if (u + 1 == fin.size()) {
      for (std::int64_t T = 1; T <= H; ++T)
        nextg[std::size_t(T)] = std::pow(double(T), -fin[u]);
    } else {
      // suffix sums of g
      double suf = 0.0;
      std::vector<double> sufv(std::size_t(H) + 2, 0.0);
      for (std::int64_t T = H; T >= 1; --T) {
        sufv[std::size_t(T)] = suf;  // sum over T' > T
        suf += g[std::size_t(T)];
      }
      for (std::int64_t T = 1; T <= H; ++T)
        nextg[std::size_t(T)] = std::pow(double(T), -fin[u]) * sufv[std::size_t(T)];
    }
    g.swap(nextg);
  }
  double total = 0.0;
  for (std::size_t S = 1; S < conv.size() && S <= std::size_t(H); ++S)
    total += conv[S] * g[S];
  return total;
}

}  // namespace oracle
