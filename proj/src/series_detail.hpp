#pragma once
/// @file series_detail.hpp
/// @brief Shared internals of the summation engines (weight arrays, chains,
///        noisy convolutions, certified outer-zone forms).  Private to src/.
///
/// The independent-heads evaluators and the z-damped polylogarithm series
/// both regroup summation variables by their total S:
///
///     value = sum_S  (damping)(S) * W(S) * G_1(S)
///
/// with W a convolution of per-group weight functions and G_1 a chain of
/// suffix sums built downward from the final block.  This header carries
/// the pieces both engines share.

#include <cstddef>
#include <vector>

#include "mzv/approx.hpp"
#include "mzv/word.hpp"

namespace mzv::sdetail {

/// Certified harmonic number H_n (n an integer-valued double >= 0).
Approx harmonic(double n);

/// Upper bound on sum_{m>X} (1+ln m)^a m^{-sigma}  (X >= 3, sigma > 1).
double one_plus_logpow_hi(int a, double sigma, double X);

// ---- noisy arrays (convolutions with tracked per-entry noise) ---------------

struct NA {
  std::vector<double> v;
  double noise = 0.0;  ///< uniform per-entry absolute error bound

  double mass() const;
};

/// Convolution with noise propagation; output clipped to `clip` entries.
NA conv_na(const NA& a, const NA& b, std::size_t clip);

/// The multiplicative identity [1].
NA delta_na();

// ---- heads ------------------------------------------------------------------

/// One leading group: its weight function on [0..HZ] plus a decreasing
/// envelope  w(m) <= envC m^{-envS} (1+ln m)^{envA}.
struct Head {
  bool singleton = true;
  double s = 0.0;         ///< singleton exponent (meaningful iff singleton)
  std::vector<double> w;  ///< weights on [0..HZ]; w[0] = 0
  double wnoise = 0.0;    ///< per-entry absolute error bound
  double envC = 1.0;
  double envS = 1.0;
  int envA = 0;

  /// Upper bound on sum_{m>X} w(m) m^{-delta} (infinite iff envS+delta <= 1).
  double tail_mass_hi(double X, double delta) const;
};

/// Weights of one leading group on [1, HZ]: singleton (s) gives m^{-s};
/// a nested group (s_1..s_p) gives the strictly-increasing inner sum
/// w(M) = M^{-s_p} sum_{0<m_1<...<m_{p-1}<M} prod m_j^{-s_j}.
Head build_head(const Index& block, long long HZ);

// ---- the chain G_1 and its power model ---------------------------------------

struct Chain {
  std::vector<double> mid, half;  ///< G_1 on [0..HZ] (entry 0 = 0)
  double kplus = 1.0;   ///< G_1(T) <= kplus T^{-e1} for all T >= 1
  double kminus = 1.0;  ///< G_1(T) >= kminus T^{-e1} for T >= HZ
  double e1 = 0.0;
  double sum_mid = 0.0, sum_half = 0.0;  ///< over [1..HZ]
};

/// Build the G_1 arrays and power model for level exponents E (level 1
/// first): G_Q(T) = T^{-E_Q}, G_u(T) = T^{-E_u} sum_{T'>T} G_{u+1}(T').
/// Requires the excesses e_u = E_u + e_{u+1} - 1 (e_Q = E_Q) to satisfy
/// e_u > 1 for u >= 2 and e_1 > 0.
Chain build_chain(const std::vector<double>& E, long long HZ);

// ---- symbolic tail terms c * Y^{-e} (1+ln Y)^p -------------------------------

struct TailTerm {
  double c;
  double e;
  int p;
};

/// Absorb one over-the-cut head into a list of tail terms in the combined
/// variable (upper bounds only; Y >= L).
std::vector<TailTerm> absorb_head(const std::vector<TailTerm>& terms,
                                  const Head& h, double L);

// ---- outer-zone closed forms --------------------------------------------------

/// P(X) = sum_{U>X} (2/U^2)(H_{U-L-1} - H_L), the mass of two unit heads
/// beyond L with sum U against a U^{-2}-type slot.  Requires X >= 2L+2.
Approx pair_outer_P(double X, double L);

/// sum_{T>HZ} 1/(T (T-S')) for integer 0 <= S' < HZ (exact harmonic form).
Approx one_head_outer_inner(double HZ, double Sp);

}  // namespace mzv::sdetail
