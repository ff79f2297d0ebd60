/// @file compose.cpp
/// @brief Compose a functional relation at s = m+1 with the special-value
///        expansions of its xi atoms, producing a pure multiple-zeta
///        relation.

#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

namespace mzv {

namespace {

/// True when the special family can expand this xi atom.
bool expandable(RelationFamily special, const Atom& a) {
  if (a.kind != AtomKind::XI) return false;
  switch (special) {
    case RelationFamily::AKZ_SPECIAL:
      return a.xi_family == XiFamily::AK;
    case RelationFamily::ITO_SPECIAL:
      return a.xi_family == XiFamily::ITO && !a.index.empty();
    case RelationFamily::GEN_ITO_SPECIAL:
      return a.xi_family == XiFamily::GEN_ITO;
    default:
      return false;
  }
}

/// The expansion of a xi atom: the special relation solved for xi, i.e. the
/// negated non-xi terms.  The atom's s must be the integer the special
/// family's m produces.
std::vector<Term> expansion_of(RelationFamily special, const Atom& a) {
  const double s = a.s;
  const long long si = static_cast<long long>(s);
  if (static_cast<double>(si) != s)
    fail(Errc::domain, "compose: xi atom has non-integer s after "
                       "substitution: " + atom_text(a));

  Relation special_rel;
  switch (special) {
    case RelationFamily::AKZ_SPECIAL:
      special_rel = instantiate_akz_special(a.index, static_cast<int>(si));
      break;
    case RelationFamily::ITO_SPECIAL:
      special_rel = instantiate_ito_special(a.index, static_cast<int>(si) - 1);
      break;
    case RelationFamily::GEN_ITO_SPECIAL:
      special_rel = instantiate_gen_ito_special(a.index, a.kn1,
                                                static_cast<int>(si) - 1);
      break;
    default:
      fail(Errc::domain, "compose: family '" +
                             relation_family_name(special) +
                             "' is not a special-value family");
  }

  // the special relation is  xi + sum(rest) = 0  with the xi term first and
  // scalar +1; the expansion of xi is -rest
  std::vector<Term> rest;
  bool seen_xi = false;
  for (const Term& t : special_rel.terms) {
    if (t.factors.size() == 1 && t.factors[0] == a) {
      if (t.scalar != 1)
        fail(Errc::internal, "compose: special xi term has scalar != 1");
      seen_xi = true;
      continue;
    }
    Term neg = t;
    neg.scalar = -neg.scalar;
    rest.push_back(std::move(neg));
  }
  if (!seen_xi)
    fail(Errc::internal,
         "compose: special relation does not contain the requested xi atom " +
             atom_text(a));
  return rest;
}

}  // namespace

Relation compose_value_relation(RelationFamily functional,
                                RelationFamily special,
                                const RelationParams& params, int m) {
  if (m < 0) fail(Errc::domain, "compose: m >= 0 required");

  RelationParams p = params;
  p.s = static_cast<double>(m) + 1.0;
  const Relation base = instantiate(functional, p);

  // expand xi factors one at a time until none remain
  std::vector<Term> work = base.terms;
  std::vector<Term> done;
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    int xi_at = -1;
    for (std::size_t i = 0; i < t.factors.size(); ++i)
      if (t.factors[i].kind == AtomKind::XI) {
        xi_at = static_cast<int>(i);
        break;
      }
    if (xi_at < 0) {
      done.push_back(std::move(t));
      continue;
    }
    const Atom xi = t.factors[static_cast<std::size_t>(xi_at)];
    if (!expandable(special, xi))
      fail(Errc::domain, "compose: no matching special-value expansion for " +
                             atom_text(xi));
    std::vector<Atom> rest_factors = t.factors;
    rest_factors.erase(rest_factors.begin() + xi_at);
    for (const Term& e : expansion_of(special, xi)) {
      std::vector<Atom> factors = rest_factors;
      factors.insert(factors.end(), e.factors.begin(), e.factors.end());
      work.push_back(make_term(t.scalar * e.scalar, std::move(factors)));
    }
  }

  Relation out;
  out.name = base.name + "+" + relation_family_name(special) + "@m=" +
             std::to_string(m);
  out.params = base.params;
  out.params.emplace_back("m", std::to_string(m));
  out.terms = collect_terms(std::move(done));
  if (out.terms.empty())
    fail(Errc::internal, "compose: relation collapsed to nothing");
  return out;
}

}  // namespace mzv
