/// @file reduce.cpp
/// @brief Reduce a block-structured atom with one free head of exponent 0 to
///        a positive-integer combination of nested (lexicographic) atoms.
///
/// Mechanism: the free head makes the chain start range over every integer
/// above the sum of the block maxima, so the value is determined by the
/// product of the blocks' generating polylogarithms at a common argument.
/// Same-argument polylog products expand over word shuffles with positive
/// integer coefficients; each shuffle word w contributes the nested value
/// zeta(w, final chain).  Base case (no blocks left): the value is the
/// nested zeta of the final chain itself.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

namespace mzv {

Relation reduce_gmt_shuffle(const Atom& a) {
  std::vector<Index> blocks;
  std::vector<double> fin_real;
  switch (a.kind) {
    case AtomKind::ZETA_MT:
    case AtomKind::ZETA_MIYAGAWA:
      for (int h : a.index) blocks.push_back(Index{h});
      fin_real = a.final_block;
      break;
    case AtomKind::ZETA_GMT:
      blocks = a.blocks;
      fin_real = a.final_block;
      break;
    default:
      fail(Errc::domain,
           "reducer: expected an independent-heads or block-structured atom, "
           "got " + atom_text(a));
  }

  Index fin;
  for (double f : fin_real) {
    if (std::rint(f) != f || f < 0.0 || f > 1e9)
      fail(Errc::domain,
           "reducer: final chain must be a nonnegative integer vector");
    fin.push_back(static_cast<int>(f));
  }

  // exactly one free head (0); all other block entries >= 1
  std::vector<Index> rest;
  int zero_blocks = 0;
  for (const Index& b : blocks) {
    if (b == Index{0}) {
      ++zero_blocks;
      continue;
    }
    for (int e : b)
      if (e < 1)
        fail(Errc::domain,
             "reducer: leading blocks other than the free head must have "
             "entries >= 1");
    rest.push_back(b);
  }
  if (zero_blocks != 1)
    fail(Errc::domain,
         "reducer: exactly one free head of exponent 0 required");

  // shuffle-fold the remaining blocks
  std::map<Index, std::int64_t> words;
  if (rest.empty())
    words[Index{}] = 1;
  else {
    words[rest[0]] = 1;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::map<Index, std::int64_t> next;
      for (const auto& [w, c] : words)
        for (const auto& [w2, c2] : shuffle_indices(w, rest[i]))
          next[w2] += c * c2;
      words = std::move(next);
    }
  }

  std::vector<Term> terms;
  terms.push_back(make_term(1, {a}));
  for (const auto& [w, c] : words) {
    Index ez = w;
    ez.insert(ez.end(), fin.begin(), fin.end());
    terms.push_back(make_term(Rational(-c), {atom_zeta_ez(ez)}));
  }

  Relation r;
  r.name = "gmt-shuffle-reduction";
  r.params = {{"atom", atom_text(a)}};
  r.terms = std::move(terms);
  return r;
}

}  // namespace mzv
