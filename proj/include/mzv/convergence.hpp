#pragma once
/// @file convergence.hpp
/// @brief Absolute-convergence domain checks for the four zeta families.
///
/// Conditions implemented (on real parts; integer indices are widened):
///  * lexicographic nesting (EZ): every suffix of length L has sum > L;
///  * independent heads + power of the total (MT): for every nonempty
///    subset S of heads, sum(S) + tail > |S| (checked exactly via sorted
///    prefix sums);
///  * singleton heads + chained final block: suffix sums of the final
///    block of lengths 2..q-1 each exceed their length, and for every
///    head subset S, sum(S) + (total final sum) - q + 1 > |S|.  Note the
///    length-1 suffix of the final block is deliberately not constrained
///    here (the stated sufficient condition starts at length 2); the
///    series evaluator enforces its own stricter guard and refuses
///    divergent chains.
///  * block-structured (GMT), two alternative sufficient conditions:
///    (i) all leading-block entries >= 1, final-block suffix sums of
///        lengths 1..q-1 exceed their length, and the total final sum
///        > q - 1;
///    (ii) the first block is exactly (0), all other leading-block
///        entries >= 1, and final-block suffix sums of lengths 1..q
///        exceed their length.
/// These are sufficient conditions, not necessary ones.

#include <string>

#include "mzv/index.hpp"

namespace mzv {

struct ConvergenceResult {
  bool convergent = false;
  std::string failed_condition;  ///< empty when convergent
  explicit operator bool() const { return convergent; }
};

ConvergenceResult check_ez(const Index& k);
ConvergenceResult check_mt(const Index& heads, double tail);
ConvergenceResult check_miyagawa(const Index& heads,
                                 const std::vector<double>& final_block);
ConvergenceResult check_miyagawa(const Index& heads, const Index& final_block);
ConvergenceResult check_gmt(const std::vector<Index>& blocks,
                            const std::vector<double>& final_block);
ConvergenceResult check_gmt(const GmtIndex& k);

/// Stricter guard used by the chained-final-block evaluator: every proper
/// suffix of the final block (lengths 1..q-1) must have sum > its length.
ConvergenceResult check_chain_guard(const std::vector<double>& final_block);
ConvergenceResult check_chain_guard(const Index& final_block);

}  // namespace mzv
