#pragma once
/// @file config.hpp
/// @brief Evaluation configuration shared by all engines, plus its cache
///        fingerprint.

#include <cstdint>
#include <sstream>
#include <string>

#include "mzv/errors.hpp"

namespace mzv {

inline constexpr const char* kEngineVersion = "mzv-0.1.0";

/// Knobs for the summation and quadrature engines.
///
/// `cutoff` is the per-dimension series cutoff N (0 = engine picks, growing
/// until the certified bound meets `target()` or the term budget is spent).
/// `budget` caps the total number of materialized series terms.  `tail_order`
/// selects the Euler-Maclaurin correction depth used by the tail machinery
/// (0: integral only; 1: +f/2; 2: +f'/12 and f'''/720 terms).
struct EvalConfig {
  std::int64_t cutoff = 0;          ///< per-dimension cutoff N (0 = auto, else >= 8)
  std::int64_t budget = 20'000'000; ///< max total series terms
  int tail_order = 2;               ///< 0, 1, or 2
  double quad_target = 1e-9;        ///< quadrature absolute error target
  double trunc_T = 40.0;            ///< semi-axis truncation point
  double tol = 1e-9;                ///< requested absolute error for series
  bool use_cache = true;

  void validate() const {
    if (cutoff != 0 && cutoff < 8)
      fail(Errc::domain, "EvalConfig: cutoff must be 0 (auto) or >= 8");
    if (budget < 8 || (cutoff != 0 && budget < cutoff))
      fail(Errc::domain, "EvalConfig: budget must cover the cutoff");
    if (tail_order < 0 || tail_order > 2)
      fail(Errc::domain, "EvalConfig: tail_order in {0,1,2}");
    if (!(quad_target > 0.0) || !(tol > 0.0))
      fail(Errc::domain, "EvalConfig: targets must be positive");
    if (!(trunc_T > 1.0)) fail(Errc::domain, "EvalConfig: trunc_T > 1 required");
  }

  /// Stable text fingerprint for cache keys.  Two configs with equal
  /// fingerprints must produce interchangeable results.
  std::string fingerprint() const {
    std::ostringstream os;
    os << kEngineVersion << "|N=" << cutoff << "|B=" << budget
       << "|ord=" << tail_order << "|qt=" << quad_target << "|T=" << trunc_T
       << "|tol=" << tol;
    return os.str();
  }
};

}  // namespace mzv
