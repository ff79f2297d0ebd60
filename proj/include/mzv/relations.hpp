#pragma once
/// @file relations.hpp
/// @brief Symbolic relations: rational-scalar terms over zeta/xi atoms,
///        family instantiators, numeric verification, value-relation
///        composition, and the shuffle-based block reducer.
///
/// A Relation is a list of terms asserted to sum to zero.  Each term is an
/// exact rational scalar times a product of atoms; atoms are evaluated by the
/// series/quadrature engines (through the cache), scalars stay exact so that
/// independently derived relations can be compared term-multiset-exactly.
///
/// Atom canonical forms (applied by the factories):
///  * independent-heads atoms sort their heads ascending (the sum is
///    symmetric in them); same for the product-family xi indices;
///  * a chained-final-block atom whose final block has length 1 is an
///    independent-heads atom;
///  * a block-structured atom drops empty blocks, sorts blocks, and if every
///    block is a singleton becomes an independent-heads / chained atom;
///  * a depth-1 nested atom with integer entry n >= 2 is a single zeta;
///  * a product-family xi with an empty index and integer s >= 2 is a single
///    zeta; the chained xi family with an empty final-chain count is the
///    product family.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/approx.hpp"
#include "mzv/config.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"
#include "mzv/xi.hpp"

namespace mzv {

enum class AtomKind {
  ZETA_EZ,        ///< nested sum, integer index (last entry >= 2)
  ZETA_MT,        ///< independent heads + power of the total
  ZETA_MIYAGAWA,  ///< independent heads + chained final block
  ZETA_GMT,       ///< block-structured leading groups + chained final block
  XI,             ///< integral-transform xi of any family
  ZETA_SINGLE,    ///< plain zeta at an integer >= 2
  GAMMA_RATIO,    ///< Gamma(s+j) / Gamma(s)
  BINOM,          ///< binomial C(s+j-1, j)
};

struct Atom {
  AtomKind kind = AtomKind::ZETA_SINGLE;
  Index index;                      ///< EZ index / MT heads / chained heads / xi index
  std::vector<Index> blocks;        ///< GMT leading blocks
  std::vector<double> final_block;  ///< MT {tail} / chained final / GMT final
  XiFamily xi_family = XiFamily::AK;
  int kn1 = 0;        ///< xi chained-family final count
  double s = 0.0;     ///< xi argument / GAMMA_RATIO / BINOM s
  int j = 0;          ///< GAMMA_RATIO / BINOM shift; ZETA_SINGLE argument

  bool operator==(const Atom& o) const;
  bool operator<(const Atom& o) const;  ///< by canonical text
};

/// Factories (canonicalize + validate convergence-relevant shape).
Atom atom_zeta_ez(const Index& k);
Atom atom_zeta_mt(const Index& heads, double tail);
Atom atom_zeta_miyagawa(const Index& heads, const std::vector<double>& final_block);
Atom atom_zeta_gmt(const std::vector<Index>& blocks,
                   const std::vector<double>& final_block);
Atom atom_xi(XiFamily family, const Index& k, int kn1, double s);
Atom atom_zeta_single(int n);
Atom atom_gamma_ratio(double s, int j);
Atom atom_binom(double s, int j);

/// Canonical display / cache-key text, e.g. "mt:0,1,2;3" or "xi:ito:2,2|s=2".
/// parse_atom inverts it (re-canonicalizing).
std::string atom_text(const Atom& a);
Atom parse_atom(const std::string& text);

struct Term {
  Rational scalar = 0;        ///< exact, lowest terms (boost keeps it reduced)
  std::vector<Atom> factors;  ///< sorted by canonical text
};

/// Sorted-factors constructor.
Term make_term(const Rational& scalar, std::vector<Atom> factors);

std::string term_text(const Term& t);

/// Merge terms with identical factor lists (scalars added exactly); zero
/// scalars dropped; result sorted by factor text.  Exact — no numerics.
std::vector<Term> collect_terms(std::vector<Term> terms);

struct Relation {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  ///< ordered bindings
  std::vector<Term> terms;  ///< asserted to sum to zero
};

struct TermDiag {
  std::string text;
  double value = 0.0;
  double err = 0.0;
};

struct VerificationReport {
  std::string name;
  double lhs = 0.0;        ///< sum of all terms
  double residual = 0.0;   ///< |lhs|
  double bound = 0.0;      ///< sum of term error bounds (+ rounding slack)
  double tolerance = 0.0;
  bool pass = false;       ///< residual <= bound + tolerance
  bool truncated = false;  ///< some term hit a budget stop
  std::vector<TermDiag> term_diags;
  int worst_term = -1;     ///< index of the largest error contribution
};

/// Atom evaluation dispatched to the engines, through the cache for the
/// expensive family atoms.
Approx evaluate_atom(const Atom& a, const EvalConfig& cfg = {});

/// Product of the atom evaluations times the rational scalar,
/// interval-propagated.
Approx evaluate_term(const Term& t, const EvalConfig& cfg = {});

/// Evaluate every term, sum, and compare |residual| against the combined
/// bound plus `tolerance`.
VerificationReport verify(const Relation& r, const EvalConfig& cfg = {},
                          double tolerance = 1e-9);

/// ---- Instantiators --------------------------------------------------------
/// Each family transcribes one identity into a Relation whose terms sum to
/// zero; every generated zeta atom is asserted convergent (fail-fast on the
/// offending parameter, never a divergent atom in the output).

enum class RelationFamily {
  AKZ_SPECIAL,             ///< nested-family xi at integer s = m
  ITO_SPECIAL,             ///< product-family xi at integer s = m+1
  ITO_FUNCTIONAL,          ///< product-family xi of {2}^j vs heads-with-zero sums
  ITO_FUNCTIONAL_REWRITTEN,///< solved form of the previous, xi isolated
  GEN_ITO_SPECIAL,         ///< chained-family xi at integer s = m+1
  MIYAGAWA_FUNCTIONAL,     ///< chained-family xi of ({2}^j; k) vs chained sums
  ITO_GENERAL_FUNCTIONAL,  ///< product-family xi, arbitrary k_i >= 2
  GEN_ITO_GENERAL_FUNCTIONAL, ///< chained-family xi, arbitrary k_i >= 2
};

RelationFamily relation_family_from_name(const std::string& name);
std::string relation_family_name(RelationFamily f);

/// Parameter bundle for instantiate(); each family reads the subset it
/// documents and rejects missing or out-of-range values.
struct RelationParams {
  std::optional<Index> k;
  std::optional<int> r;
  std::optional<int> l;
  std::optional<int> m;
  std::optional<int> kn1;
  std::optional<double> s;
};

Relation instantiate(RelationFamily family, const RelationParams& p);

Relation instantiate_akz_special(const Index& k, int m);
Relation instantiate_ito_special(const Index& k, int m);
Relation instantiate_ito_functional(int r, double s);
Relation instantiate_ito_functional_rewritten(int r, double s);
Relation instantiate_gen_ito_special(const Index& k, int kn1, int m);
Relation instantiate_miyagawa_functional(int l, int k, double s);
Relation instantiate_ito_general_functional(int l, const Index& k, double s);
Relation instantiate_gen_ito_general_functional(int l, const Index& k, int kn1,
                                                double s);

/// ---- Composition ------------------------------------------------------------
/// Substitute s = m+1 into the functional family and expand every remaining
/// xi atom through the matching special-value family, leaving a pure
/// multiple-zeta relation (no xi atoms).  Fails if a xi atom has no matching
/// expansion or a substituted atom diverges.
Relation compose_value_relation(RelationFamily functional,
                                RelationFamily special,
                                const RelationParams& params, int m);

/// ---- Serialization ------------------------------------------------------------
/// Stable-field-order JSON document {schema, name, params, terms, report?};
/// schema version "mzv-relation/1".  Factors serialize as {kind, payload}
/// pairs that parse_atom reassembles.
std::string relation_to_json(const Relation& r,
                             const VerificationReport* report = nullptr,
                             int indent = 2);
Relation relation_from_json(const std::string& text);

/// ---- Block reducer ----------------------------------------------------------
/// Input: an independent-heads / chained / block-structured atom whose
/// variable set is one free head of exponent 0 plus integer blocks, with an
/// all-integer final chain.  Output: a Relation equating it to a
/// positive-integer combination of nested atoms, via the word-shuffle
/// product.
Relation reduce_gmt_shuffle(const Atom& a);

}  // namespace mzv
