#pragma once
/// @file index.hpp
/// @brief Index types for the zeta families, parsing/formatting, duality,
///        shuffle on indices, compositions and the combinatorial
///        coefficients used by the identity instantiators.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// A plain index (k_1,...,k_n): used for the lexicographic-nesting and
/// independent-summation families.  Entries are nonnegative integers at the
/// container level; individual evaluators impose their own positivity and
/// convergence requirements.
// (Index = std::vector<int> lives in word.hpp.)

/// Block-structured index {(k_11..),(k_21..),...; (f_1,...,f_s)}: the
/// leading blocks each sum a nested group, and the final block chains
/// powers of cumulative sums.  All leading blocks of length 1 with a final
/// block of length 1 is exactly the independent-summation family.
struct GmtIndex {
  std::vector<Index> blocks;  ///< leading blocks (may be empty list)
  Index final_block;          ///< nonempty
  bool operator==(const GmtIndex&) const = default;
};

int weight(const Index& k);
int depth(const Index& k);
int weight(const GmtIndex& k);
int depth(const GmtIndex& k);

/// Admissible = nonempty, all entries >= 1, last entry >= 2.  This is the
/// convergence condition for the lexicographic-nesting family and the
/// domain of the duality involution.
bool admissible(const Index& k);

enum class End { First, Last };

/// Return a copy with the chosen end entry shifted by delta.  The resulting
/// entry must stay >= 1 (>= 0 when allow_zero).
Index shift(const Index& k, End end, int delta, bool allow_zero = false);

/// All length-`parts` tuples of nonnegative integers summing to `total`,
/// in ascending lexicographic order.  compositions(2,2) = {(0,2),(1,1),(2,0)}.
std::vector<std::vector<int>> compositions(int total, int parts);

/// b(k; j) = prod_i binom(k_i + j_i - 1, j_i), exact.
BigInt b_coefficient(const Index& k, const std::vector<int>& j);

/// Duality: index -> word -> reverse+complement -> index.  Requires an
/// admissible index; an involution on admissible indices.
Index dual_index(const Index& k);

/// Shuffle product lifted to indices: encode, shuffle words, decode.
/// Result sorted by index (lexicographic), coefficients positive.
std::vector<std::pair<Index, std::int64_t>> shuffle_indices(const Index& a,
                                                            const Index& b);

/// One multiplicand in the expansion of a product of single-variable
/// polylogarithms of the common argument 1-e^{-t}: for each position i the
/// branch on j_i vs k_i-1 yields a sign, optional zeta(k_i - j_i) factors,
/// a count b of linear-in-t factors, and a polylogarithm word per position.
struct ItoCoeff {
  int sign = 1;                  ///< product of the branch signs
  std::vector<int> zeta_factors; ///< arguments of plain zeta factors (>=2)
  int t_power = 0;               ///< number of positions with j_i = k_i - 1
  std::vector<Index> lis;        ///< polylog words (one per position, possibly empty)
};

/// Branch data for one exponent tuple j against index k (same length).
ItoCoeff ito_coefficients(const std::vector<int>& j, const Index& k);

/// ---- Parsing ------------------------------------------------------------
/// Grammar (whitespace ignored):
///   plain  := item ("," item)*
///   item   := INT | "{" INT "}" "^" INT        (repetition sugar)
///   gmt    := lead ";" plain
///   lead   := element ("," element)*           (may be empty)
///   element:= "(" plain ")" | item             (bare item = singleton block)
/// Negative entries are rejected at parse time.
struct ParsedIndex {
  bool is_gmt = false;
  Index plain;   ///< valid when !is_gmt
  GmtIndex gmt;  ///< valid when is_gmt
};

ParsedIndex parse_index(const std::string& text);

/// Canonical flat form "2,1,3".  parse(format(k)) round-trips.
std::string format_index(const Index& k);

/// Canonical block form "0,(1,2);3" (singleton blocks bare, longer blocks
/// parenthesized, final block after ';').  parse(format(k)) round-trips.
std::string format_index(const GmtIndex& k);

}  // namespace mzv
