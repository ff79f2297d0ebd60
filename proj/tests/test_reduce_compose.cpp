/// @file test_reduce_compose.cpp
/// @brief The shuffle-based block reducer (exact expected outputs plus
///        numeric verification) and functional-times-special composition
///        into pure multiple-zeta relations.

#include <doctest.h>

#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

using mzv::Atom;
using mzv::AtomKind;
using mzv::Index;
using mzv::Rational;
using mzv::Relation;
using mzv::Term;
using mzv::XiFamily;

namespace {

void check_same_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> diff = a;
  for (const Term& t : b) {
    Term neg = t;
    neg.scalar = -neg.scalar;
    diff.push_back(std::move(neg));
  }
  const auto left = mzv::collect_terms(std::move(diff));
  for (const auto& t : left) CAPTURE(mzv::term_text(t));
  CHECK(left.empty());
}

Term t1(const Rational& c, Atom a) { return mzv::make_term(c, {std::move(a)}); }

bool has_xi(const Relation& r) {
  for (const auto& t : r.terms)
    for (const auto& a : t.factors)
      if (a.kind == AtomKind::XI) return true;
  return false;
}

mzv::EvalConfig no_cache() {
  mzv::EvalConfig cfg;
  cfg.use_cache = false;
  return cfg;
}

}  // namespace

TEST_CASE("reduce: single nested block folds straight into a nested atom") {
  const Atom a = mzv::atom_zeta_gmt({Index{0}, Index{1, 2}}, {2.0});
  const Relation r = mzv::reduce_gmt_shuffle(a);
  std::vector<Term> want;
  want.push_back(t1(Rational(1), a));
  want.push_back(t1(Rational(-1), mzv::atom_zeta_ez(Index{1, 2, 2})));
  check_same_terms(r.terms, want);
  CHECK(mzv::verify(r, no_cache(), 1e-6).pass);
}

TEST_CASE("reduce: equal singleton heads shuffle with multiplicities") {
  const Atom a = mzv::atom_zeta_mt(Index{0, 2, 2}, 2.0);
  const Relation r = mzv::reduce_gmt_shuffle(a);
  std::vector<Term> want;
  want.push_back(t1(Rational(1), a));
  want.push_back(t1(Rational(-2), mzv::atom_zeta_ez(Index{2, 2, 2})));
  want.push_back(t1(Rational(-4), mzv::atom_zeta_ez(Index{1, 3, 2})));
  check_same_terms(r.terms, want);
  CHECK(mzv::verify(r, no_cache(), 1e-6).pass);
}

TEST_CASE("reduce: distinct singleton heads") {
  const Atom a = mzv::atom_zeta_mt(Index{0, 1, 2}, 2.0);
  const Relation r = mzv::reduce_gmt_shuffle(a);
  std::vector<Term> want;
  want.push_back(t1(Rational(1), a));
  want.push_back(t1(Rational(-2), mzv::atom_zeta_ez(Index{1, 2, 2})));
  want.push_back(t1(Rational(-1), mzv::atom_zeta_ez(Index{2, 1, 2})));
  check_same_terms(r.terms, want);
  CHECK(mzv::verify(r, no_cache(), 1e-6).pass);
}

TEST_CASE("reduce: longer final chains ride along unchanged") {
  const Atom a = mzv::atom_zeta_miyagawa(Index{0, 2}, {1.0, 2.0});
  const Relation r = mzv::reduce_gmt_shuffle(a);
  std::vector<Term> want;
  want.push_back(t1(Rational(1), a));
  want.push_back(t1(Rational(-1), mzv::atom_zeta_ez(Index{2, 1, 2})));
  check_same_terms(r.terms, want);
  CHECK(mzv::verify(r, no_cache(), 1e-6).pass);
}

TEST_CASE("reduce: input validation") {
  // no (0) block
  CHECK_THROWS_AS(mzv::reduce_gmt_shuffle(mzv::atom_zeta_mt(Index{2, 2}, 2.0)),
                  mzv::Error);
  // two (0) blocks
  CHECK_THROWS_AS(
      mzv::reduce_gmt_shuffle(mzv::atom_zeta_mt(Index{0, 0, 2}, 2.0)),
      mzv::Error);
  // non-integer final chain
  CHECK_THROWS_AS(
      mzv::reduce_gmt_shuffle(mzv::atom_zeta_mt(Index{0, 2}, 2.5)),
      mzv::Error);
  // not a family atom at all
  CHECK_THROWS_AS(mzv::reduce_gmt_shuffle(mzv::atom_zeta_single(2)),
                  mzv::Error);
}

TEST_CASE("compose: functional x special leaves a pure zeta relation") {
  {
    mzv::RelationParams p;
    p.r = 2;
    const Relation c = mzv::compose_value_relation(
        mzv::RelationFamily::ITO_FUNCTIONAL, mzv::RelationFamily::ITO_SPECIAL,
        p, /*m=*/1);
    CHECK(!has_xi(c));
    const auto rep = mzv::verify(c, no_cache(), 1e-5);
    CHECK(rep.pass);
  }
  {
    mzv::RelationParams p;
    p.l = 1;
    p.kn1 = 1;  // final-chain length of the functional identity
    const Relation c = mzv::compose_value_relation(
        mzv::RelationFamily::MIYAGAWA_FUNCTIONAL,
        mzv::RelationFamily::GEN_ITO_SPECIAL, p, /*m=*/1);
    CHECK(!has_xi(c));
    const auto rep = mzv::verify(c, no_cache(), 1e-4);
    CHECK(rep.pass);
  }
}

TEST_CASE("compose: two derivations of the same value relation coincide") {
  mzv::RelationParams pg;
  pg.l = 0;
  pg.k = Index{2};
  const Relation a = mzv::compose_value_relation(
      mzv::RelationFamily::ITO_GENERAL_FUNCTIONAL,
      mzv::RelationFamily::ITO_SPECIAL, pg, /*m=*/1);

  mzv::RelationParams pr;
  pr.r = 1;
  const Relation b = mzv::compose_value_relation(
      mzv::RelationFamily::ITO_FUNCTIONAL_REWRITTEN,
      mzv::RelationFamily::ITO_SPECIAL, pr, /*m=*/1);

  CHECK(!has_xi(a));
  CHECK(!has_xi(b));
  check_same_terms(a.terms, b.terms);
}

TEST_CASE("compose: the s=1 endpoint is refused, not fudged") {
  // at m=0 the functional side sits on a pole-cancellation boundary the
  // convergent-series framework cannot represent: fail fast
  mzv::RelationParams p;
  p.r = 2;
  CHECK_THROWS_AS(
      mzv::compose_value_relation(mzv::RelationFamily::ITO_FUNCTIONAL,
                                  mzv::RelationFamily::ITO_SPECIAL, p, 0),
      mzv::Error);
}
