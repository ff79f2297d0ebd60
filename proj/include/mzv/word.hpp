#pragma once
/// @file word.hpp
/// @brief Two-letter word encoding of indices, duality, and the shuffle
///        product on words.
///
/// Convention (fixed by oracle checks, see tests): an index (k_1,...,k_n)
/// in the increasing-variable convention maps to the word
///     x^{k_n-1} y x^{k_{n-1}-1} y ... x^{k_1-1} y
/// read left to right.  Under this encoding
///   * the generating function I(0,z;w) built by integrating dt/t for 'x'
///     and dt/(1-t) for 'y' (outermost letter first) is the multiple
///     polylogarithm whose z->1 limit is zeta(k);
///   * the dual index is reverse + (x<->y) complement;
///   * the shuffle of words expands products of polylogarithms of a common
///     argument.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mzv {

using Index = std::vector<int>;
using Word = std::string;  // letters 'x' and 'y' only

/// Index -> word.  Requires every entry >= 1 (entry e contributes x^{e-1} y).
Word index_to_word(const Index& k);

/// Word -> index.  Requires a nonempty word over {x,y} ending in 'y'.
Index word_to_index(const Word& w);

/// reverse + complement (x<->y)
Word dual_word(const Word& w);

/// Shuffle product of two words; coefficients are positive integers and sum
/// to C(|u|+|v|, |u|).
std::map<Word, std::int64_t> shuffle_words(const Word& u, const Word& v);

}  // namespace mzv
