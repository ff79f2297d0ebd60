#pragma once
/// @file series.hpp
/// @brief Certified evaluators for the four zeta families, the polylogarithm
///        families, and the generic linear-forms zeta.
///
/// Families:
///  * lexicographic nesting (EZ):       sum over 0<m_1<...<m_n of
///        prod m_i^{-s_i};
///  * independent heads + total (MT):   sum over m_1..m_r >= 1 of
///        prod m_i^{-s_i} * (m_1+...+m_r)^{-tail};
///  * singleton heads + chained final block ("hat" form): the total
///        M = m_1+...+m_r is followed by a strictly increasing chain
///        M = n_1 < n_2 < ... < n_q carrying the final-block exponents;
///  * block-structured (GMT): each leading block is a nested group
///        0<m_{i,1}<...<m_{i,n_i} contributing prod m_{i,j}^{-s_{i,j}},
///        and the chain starts at the sum of the block maxima.
///
/// Every evaluator returns a value together with a certified absolute error
/// bound covering series truncation, model tails, and rounding.
///
/// Final-block entries may be non-integer reals (functional-relation
/// arguments such as b+s); head/block entries are integers.

#include <vector>

#include "mzv/approx.hpp"
#include "mzv/config.hpp"
#include "mzv/index.hpp"

namespace mzv {

/// Lexicographic-nesting zeta.  Admissible indices use the two-sided
/// geometric-split engine (fast, ~1e-14 accuracy); convergent indices with
/// zero entries fall back to direct nested summation with an envelope tail.
Approx eval_zeta_ez(const Index& k, const EvalConfig& cfg = {});

/// Independent heads + power of the total.
Approx eval_zeta_mt(const Index& heads, double tail,
                    const EvalConfig& cfg = {});

/// Singleton heads + chained final block.
Approx eval_zeta_miyagawa(const Index& heads,
                          const std::vector<double>& final_block,
                          const EvalConfig& cfg = {});

/// Block-structured leading groups + chained final block.
Approx eval_zeta_gmt(const std::vector<Index>& blocks,
                     const std::vector<double>& final_block,
                     const EvalConfig& cfg = {});

/// Convenience overload on the parsed block container (integer entries).
Approx eval_zeta_gmt(const GmtIndex& k, const EvalConfig& cfg = {});

/// ---- Polylogarithms ------------------------------------------------------

enum class PolylogKind {
  MULTI,      ///< nested: sum_{m_1<...<m_n} z^{m_n} / prod m_i^{k_i}
  WITH_TAIL,  ///< independent: sum z^{M} / (prod m_i^{k_i} * M^{k_tail}),
              ///< M = m_1+...+m_n
  GMT_LI      ///< block-structured heads, z^{sum of block maxima} / chain
};

/// Single- or multi-index polylogarithm at real z in [0,1).  `tail` is used
/// by WITH_TAIL only.  GMT_LI reads `blocks` instead of `index`: the leading
/// groups followed by the final chain block as the last element.
Approx eval_polylog(PolylogKind kind, const Index& index, double z,
                    int tail = 0, const std::vector<Index>& blocks = {},
                    const EvalConfig& cfg = {});

/// Shorthand for the nested kind.
Approx eval_polylog_multi(const Index& k, double z, const EvalConfig& cfg = {});

/// ---- Generic linear-forms zeta -------------------------------------------
/// zeta(s; A) = sum_{m_1..m_r >= 1} prod_{i=1}^{n} (sum_j a_{ij} m_j)^{-s_i}
/// with a_{ij} >= 0 and every row of A nonzero.  Direct summation with a
/// certified product-envelope tail; refuses inputs whose convergence it
/// cannot certify.
Approx eval_linear_forms_zeta(const std::vector<std::vector<double>>& A,
                              const std::vector<double>& s,
                              const EvalConfig& cfg = {});

}  // namespace mzv
