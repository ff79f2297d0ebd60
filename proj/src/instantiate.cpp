/// @file instantiate.cpp
/// @brief Family instantiators: transcribe each identity into a Relation
///        whose terms sum to zero.
///
/// Conventions shared by all families:
///  * the xi term enters with scalar +1 (times its stated sign), every
///    expansion term enters negated, so the term list sums to zero;
///  * Gamma(s+j)/Gamma(s) and C(s+j-1, j) factors fold to exact rationals
///    when s is a (small) integer, and stay symbolic atoms otherwise;
///  * every generated zeta atom passes its family's convergence check at
///    construction (the factories fail fast on the offending parameter);
///  * families whose expansions contain nested (lexicographic) atoms with s
///    in the last slot require integer s, since the nested evaluator works
///    on integer indices.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

namespace mzv {

namespace {

Index ones(int n) { return Index(static_cast<std::size_t>(n), 1); }

Index rep(int value, int n) {
  return Index(static_cast<std::size_t>(n), value);
}

Index concat(Index a, const Index& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string fmt_param(double x) {
  if (std::rint(x) == x && std::fabs(x) < 1e15)
    return std::to_string(static_cast<long long>(x));
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) fail(Errc::internal, "fmt_param: to_chars failed");
  return std::string(buf, ptr);
}

bool integral_s(double s, long long& out) {
  if (std::rint(s) != s || std::fabs(s) > 1e12) return false;
  out = static_cast<long long>(s);
  return true;
}

/// Multiply the term by Gamma(s+j)/Gamma(s): exact rising factorial at
/// integer s >= 1, symbolic atom otherwise.
void mul_gamma_ratio(Term& t, double s, int j) {
  if (j == 0) return;
  long long si = 0;
  if (integral_s(s, si) && si >= 1) {
    BigInt p = 1;
    for (int i = 0; i < j; ++i) p *= BigInt(si + i);
    t.scalar *= Rational(p);
  } else {
    t.factors.push_back(atom_gamma_ratio(s, j));
  }
}

/// Multiply the term by C(s+j-1, j).
void mul_binom_shifted(Term& t, double s, int j) {
  if (j == 0) return;
  long long si = 0;
  if (integral_s(s, si) && si >= 1) {
    BigInt p = 1;
    for (int i = 0; i < j; ++i) p *= BigInt(si + i);
    t.scalar *= Rational(p, factorial(j));
  } else {
    t.factors.push_back(atom_binom(s, j));
  }
}

void push_zeta2(std::vector<Atom>& factors, int count) {
  for (int i = 0; i < count; ++i) factors.push_back(atom_zeta_single(2));
}

/// finalize: sort factors of each term and attach name/params.
Relation finish(std::string name,
                std::vector<std::pair<std::string, std::string>> params,
                std::vector<Term> terms) {
  Relation r;
  r.name = std::move(name);
  r.params = std::move(params);
  for (Term& t : terms)
    std::sort(t.factors.begin(), t.factors.end());
  r.terms = std::move(terms);
  return r;
}

void require_positive_entries(const Index& k, const char* family) {
  if (k.empty())
    fail(Errc::domain, std::string(family) + ": index must be nonempty");
  for (int e : k)
    if (e < 1)
      fail(Errc::domain, std::string(family) + ": index entries must be >= 1");
}

void require_ge2_entries(const Index& k, const char* family) {
  if (k.empty())
    fail(Errc::domain, std::string(family) + ": index must be nonempty");
  for (int e : k)
    if (e < 2)
      fail(Errc::domain, std::string(family) + ": index entries must be >= 2");
}

long long require_integer_s(double s, const char* family) {
  long long si = 0;
  if (!integral_s(s, si) || si < 2)
    fail(Errc::domain,
         std::string(family) +
             ": integer s >= 2 required (nested atoms carry s in the last slot)");
  return si;
}

/// Mixed-radix iteration over j-tuples with 0 <= j_i <= 2 k_i - 2.
bool next_tuple(std::vector<int>& j, const Index& k) {
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 2 * k[i] - 2) {
      ++j[i];
      std::fill(j.begin(), j.begin() + static_cast<std::ptrdiff_t>(i), 0);
      return true;
    }
  }
  return false;
}

/// Blocks of the sum-expansion term: the free head (0) plus one block per
/// nonempty polylog word.
std::vector<Index> expansion_blocks(const ItoCoeff& c) {
  std::vector<Index> blocks{Index{0}};
  for (const Index& w : c.lis)
    if (!w.empty()) blocks.push_back(w);
  return blocks;
}

}  // namespace

/// ---- family A: nested-family xi at integer s = m ---------------------------

Relation instantiate_akz_special(const Index& k, int m) {
  require_positive_entries(k, "akz-special");
  if (m < 1) fail(Errc::domain, "akz-special: m >= 1 required");

  const Index kplus = shift(k, End::Last, +1);
  const Index dual = dual_index(kplus);
  const int d = depth(dual);

  std::vector<Term> terms;
  terms.push_back(make_term(1, {atom_xi(XiFamily::AK, k, 0,
                                        static_cast<double>(m))}));
  for (const std::vector<int>& j : compositions(m - 1, d)) {
    Index idx = dual;
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] += j[static_cast<std::size_t>(i)];
    if (!admissible(idx))
      fail(Errc::internal,
           "akz-special: generated nested atom not admissible (identity "
           "anomaly at " + format_index(idx) + ")");
    terms.push_back(
        make_term(Rational(-b_coefficient(dual, j)), {atom_zeta_ez(idx)}));
  }
  return finish("akz-special",
                {{"k", format_index(k)}, {"m", std::to_string(m)}},
                std::move(terms));
}

/// ---- family B: product-family xi at integer s = m+1 ------------------------

Relation instantiate_ito_special(const Index& k, int m) {
  require_positive_entries(k, "ito-special");
  if (m < 0) fail(Errc::domain, "ito-special: m >= 0 required");

  std::vector<Term> terms;
  terms.push_back(make_term(
      1, {atom_xi(XiFamily::ITO, k, 0, static_cast<double>(m + 1))}));
  terms.push_back(make_term(Rational(-1, factorial(m)),
                            {atom_zeta_mt(concat(k, ones(m)), 1.0)}));
  return finish("ito-special",
                {{"k", format_index(k)}, {"m", std::to_string(m)}},
                std::move(terms));
}

/// ---- family C: product-family xi functional equation -----------------------

Relation instantiate_ito_functional(int r, double s) {
  if (r < 1) fail(Errc::domain, "ito-functional: r >= 1 required");
  if (!(s > 1.0))
    fail(Errc::domain, "ito-functional: s > 1 required (the j = 0 term is the "
                       "plain zeta at s)");

  std::vector<Term> terms;
  for (int j = 0; j <= r - 1; ++j) {
    {
      Term t = make_term(Rational(binomial(r - 1, j)) * ((j % 2) ? -1 : 1), {});
      push_zeta2(t.factors, r - 1 - j);
      t.factors.push_back(atom_xi(XiFamily::ITO, rep(2, j), 0, s));
      terms.push_back(std::move(t));
    }
    {
      Term t = make_term(Rational(-binomial(r - 1, j)), {});
      mul_gamma_ratio(t, s, j);
      Index heads = concat(concat(Index{0}, rep(2, r - 1 - j)), ones(j));
      t.factors.push_back(atom_zeta_mt(heads, static_cast<double>(j) + s));
      terms.push_back(std::move(t));
    }
  }
  return finish("ito-functional", {{"r", std::to_string(r)}, {"s", fmt_param(s)}},
                std::move(terms));
}

/// ---- family D: solved form of family C -------------------------------------

Relation instantiate_ito_functional_rewritten(int r, double s) {
  if (r < 1) fail(Errc::domain, "ito-functional-rewritten: r >= 1 required");
  if (!(s > 1.0))
    fail(Errc::domain, "ito-functional-rewritten: s > 1 required");

  std::vector<Term> terms;
  terms.push_back(make_term(1, {atom_xi(XiFamily::ITO, rep(2, r), 0, s)}));
  for (const std::vector<int>& a : compositions(r, 3)) {
    const int a1 = a[0], a2 = a[1], a3 = a[2];
    Rational scalar(factorial(r), factorial(a1) * factorial(a3));
    if ((a2 + a3) % 2 == 0) scalar = -scalar;  // negated expansion term
    Term t = make_term(scalar, {});
    push_zeta2(t.factors, a1);
    mul_binom_shifted(t, s, a2);
    Index heads = concat(concat(Index{0}, ones(a2)), rep(2, a3));
    t.factors.push_back(atom_zeta_mt(heads, static_cast<double>(a2) + s));
    terms.push_back(std::move(t));
  }
  return finish("ito-functional-rewritten",
                {{"r", std::to_string(r)}, {"s", fmt_param(s)}},
                std::move(terms));
}

/// ---- family E: chained-family xi at integer s = m+1 ------------------------

Relation instantiate_gen_ito_special(const Index& k, int kn1, int m) {
  require_positive_entries(k, "gen-ito-special");
  if (kn1 < 1) fail(Errc::domain, "gen-ito-special: final count >= 1 required");
  if (m < 0) fail(Errc::domain, "gen-ito-special: m >= 0 required");

  std::vector<Term> terms;
  terms.push_back(make_term(
      1, {atom_xi(XiFamily::GEN_ITO, k, kn1, static_cast<double>(m + 1))}));
  for (const std::vector<int>& a : compositions(m, kn1 + 1)) {
    const int a_last = a[static_cast<std::size_t>(kn1)];
    Index chain_seed;
    for (int i = 0; i < kn1; ++i)
      chain_seed.push_back(a[static_cast<std::size_t>(i)] + 1);
    chain_seed.push_back(2);
    const Index fin_int =
        shift(dual_index(chain_seed), End::First, -1, /*allow_zero=*/true);
    std::vector<double> fin(fin_int.begin(), fin_int.end());
    terms.push_back(
        make_term(Rational(-1, factorial(a_last)),
                  {atom_zeta_miyagawa(concat(ones(a_last), k), fin)}));
  }
  return finish("gen-ito-special",
                {{"k", format_index(k)},
                 {"kn1", std::to_string(kn1)},
                 {"m", std::to_string(m)}},
                std::move(terms));
}

/// ---- family F: chained-family functional equation ({2}^j; k) ---------------

Relation instantiate_miyagawa_functional(int l, int k, double s) {
  if (l < 0) fail(Errc::domain, "miyagawa-functional: l >= 0 required");
  if (k < 0) fail(Errc::domain, "miyagawa-functional: k >= 0 required");
  const long long si = require_integer_s(s, "miyagawa-functional");

  std::vector<Term> terms;
  {
    Term t = make_term(1, {});
    push_zeta2(t.factors, l);
    t.factors.push_back(
        atom_zeta_ez(concat(ones(k), Index{static_cast<int>(si)})));
    terms.push_back(std::move(t));
  }
  for (int j = 1; j <= l; ++j) {
    const Rational base = Rational(binomial(l, j)) * ((j % 2) ? -1 : 1);
    // the i-sum is empty when k = 0 (stated convention)
    for (int i = 1; i <= k; ++i) {
      Term t = make_term(base * ((i % 2) ? 1 : -1), {});
      push_zeta2(t.factors, l - j);
      t.factors.push_back(atom_zeta_mt(rep(2, j), static_cast<double>(i)));
      t.factors.push_back(
          atom_zeta_ez(concat(ones(k - i), Index{static_cast<int>(si)})));
      terms.push_back(std::move(t));
    }
    {
      Term t = make_term(base * ((k % 2) ? -1 : 1), {});
      push_zeta2(t.factors, l - j);
      t.factors.push_back(atom_xi(XiFamily::GEN_ITO, rep(2, j), k, s));
      terms.push_back(std::move(t));
    }
  }
  for (const std::vector<int>& comp : compositions(l, k + 2)) {
    const int a = comp[0];
    const int b_last = comp[static_cast<std::size_t>(k + 1)];
    Term t = make_term(Rational(-factorial(l), factorial(a)), {});
    mul_binom_shifted(t, s, b_last);
    Index heads = concat(concat(Index{0}, rep(2, a)), ones(l - a));
    std::vector<double> fin;
    for (int i = 1; i <= k; ++i)
      fin.push_back(static_cast<double>(comp[static_cast<std::size_t>(i)] + 1));
    fin.push_back(static_cast<double>(b_last) + s);
    t.factors.push_back(atom_zeta_miyagawa(heads, fin));
    terms.push_back(std::move(t));
  }
  return finish("miyagawa-functional",
                {{"l", std::to_string(l)},
                 {"k", std::to_string(k)},
                 {"s", fmt_param(s)}},
                std::move(terms));
}

/// ---- family G: product-family functional equation, general k_i >= 2 --------

Relation instantiate_ito_general_functional(int l, const Index& k, double s) {
  if (l < 0) fail(Errc::domain, "ito-general: l >= 0 required");
  require_ge2_entries(k, "ito-general");
  if (!(s >= 1.0)) fail(Errc::domain, "ito-general: s >= 1 required");

  std::vector<Term> terms;
  terms.push_back(
      make_term(1, {atom_xi(XiFamily::ITO, concat(ones(l), k), 0, s)}));
  std::vector<int> j(k.size(), 0);
  do {
    const ItoCoeff c = ito_coefficients(j, k);
    const int b = c.t_power;
    Term t = make_term(Rational(-c.sign), {});
    for (int zf : c.zeta_factors) t.factors.push_back(atom_zeta_single(zf));
    mul_gamma_ratio(t, s, l + b);
    t.factors.push_back(atom_zeta_gmt(expansion_blocks(c),
                                      {static_cast<double>(l + b) + s}));
    terms.push_back(std::move(t));
  } while (next_tuple(j, k));
  return finish("ito-general",
                {{"l", std::to_string(l)},
                 {"k", format_index(k)},
                 {"s", fmt_param(s)}},
                std::move(terms));
}

/// ---- family H: chained-family functional equation, general k_i >= 2 --------

Relation instantiate_gen_ito_general_functional(int l, const Index& k, int kn1,
                                                double s) {
  if (l < 0) fail(Errc::domain, "gen-ito-general: l >= 0 required");
  require_ge2_entries(k, "gen-ito-general");
  if (kn1 < 1) fail(Errc::domain, "gen-ito-general: final count >= 1 required");
  const long long si = require_integer_s(s, "gen-ito-general");

  std::vector<Term> terms;
  terms.push_back(make_term((kn1 % 2) ? -1 : 1,
                            {atom_xi(XiFamily::GEN_ITO, concat(ones(l), k),
                                     kn1, s)}));
  std::vector<int> j(k.size(), 0);
  do {
    const ItoCoeff c = ito_coefficients(j, k);
    const int b = c.t_power;
    for (const std::vector<int>& cc : compositions(l + b, kn1 + 1)) {
      const int c_last = cc[static_cast<std::size_t>(kn1)];
      Term t = make_term(Rational(-c.sign) * Rational(factorial(l + b)), {});
      for (int zf : c.zeta_factors) t.factors.push_back(atom_zeta_single(zf));
      mul_binom_shifted(t, s, c_last);
      std::vector<double> fin;
      for (int i = 0; i < kn1; ++i)
        fin.push_back(static_cast<double>(cc[static_cast<std::size_t>(i)] + 1));
      fin.push_back(static_cast<double>(c_last) + s);
      t.factors.push_back(atom_zeta_gmt(expansion_blocks(c), fin));
      terms.push_back(std::move(t));
    }
  } while (next_tuple(j, k));
  for (int i = 1; i <= kn1; ++i) {
    Term t = make_term((i % 2) ? 1 : -1, {});
    t.factors.push_back(
        atom_zeta_mt(concat(ones(l), k), static_cast<double>(i)));
    t.factors.push_back(
        atom_zeta_ez(concat(ones(kn1 - i), Index{static_cast<int>(si)})));
    terms.push_back(std::move(t));
  }
  return finish("gen-ito-general",
                {{"l", std::to_string(l)},
                 {"k", format_index(k)},
                 {"kn1", std::to_string(kn1)},
                 {"s", fmt_param(s)}},
                std::move(terms));
}

/// ---- dispatcher -------------------------------------------------------------

std::string relation_family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::AKZ_SPECIAL: return "akz-special";
    case RelationFamily::ITO_SPECIAL: return "ito-special";
    case RelationFamily::ITO_FUNCTIONAL: return "ito-functional";
    case RelationFamily::ITO_FUNCTIONAL_REWRITTEN:
      return "ito-functional-rewritten";
    case RelationFamily::GEN_ITO_SPECIAL: return "gen-ito-special";
    case RelationFamily::MIYAGAWA_FUNCTIONAL: return "miyagawa-functional";
    case RelationFamily::ITO_GENERAL_FUNCTIONAL: return "ito-general";
    case RelationFamily::GEN_ITO_GENERAL_FUNCTIONAL: return "gen-ito-general";
  }
  fail(Errc::internal, "relation_family_name: unknown family");
}

RelationFamily relation_family_from_name(const std::string& name) {
  for (RelationFamily f :
       {RelationFamily::AKZ_SPECIAL, RelationFamily::ITO_SPECIAL,
        RelationFamily::ITO_FUNCTIONAL,
        RelationFamily::ITO_FUNCTIONAL_REWRITTEN,
        RelationFamily::GEN_ITO_SPECIAL, RelationFamily::MIYAGAWA_FUNCTIONAL,
        RelationFamily::ITO_GENERAL_FUNCTIONAL,
        RelationFamily::GEN_ITO_GENERAL_FUNCTIONAL})
    if (relation_family_name(f) == name) return f;
  fail(Errc::parse, "unknown relation family '" + name + "'");
}

namespace {

const Index& need_index(const std::optional<Index>& v, const char* family) {
  if (!v) fail(Errc::domain, std::string(family) + ": parameter k required");
  return *v;
}

int need_int(const std::optional<int>& v, const char* name,
             const char* family) {
  if (!v)
    fail(Errc::domain,
         std::string(family) + ": parameter " + name + " required");
  return *v;
}

double need_s(const std::optional<double>& v, const char* family) {
  if (!v) fail(Errc::domain, std::string(family) + ": parameter s required");
  return *v;
}

/// r, when given alongside k, must agree with k's depth (CLI convenience).
void check_r(const std::optional<int>& r, const Index& k, const char* family) {
  if (r && *r != static_cast<int>(k.size()))
    fail(Errc::domain,
         std::string(family) + ": r disagrees with the depth of k");
}

}  // namespace

Relation instantiate(RelationFamily family, const RelationParams& p) {
  switch (family) {
    case RelationFamily::AKZ_SPECIAL: {
      const Index& k = need_index(p.k, "akz-special");
      check_r(p.r, k, "akz-special");
      return instantiate_akz_special(k, need_int(p.m, "m", "akz-special"));
    }
    case RelationFamily::ITO_SPECIAL: {
      Index k = p.k ? *p.k : rep(2, need_int(p.r, "r", "ito-special"));
      check_r(p.r, k, "ito-special");
      return instantiate_ito_special(k, need_int(p.m, "m", "ito-special"));
    }
    case RelationFamily::ITO_FUNCTIONAL:
      return instantiate_ito_functional(need_int(p.r, "r", "ito-functional"),
                                        need_s(p.s, "ito-functional"));
    case RelationFamily::ITO_FUNCTIONAL_REWRITTEN:
      return instantiate_ito_functional_rewritten(
          need_int(p.r, "r", "ito-functional-rewritten"),
          need_s(p.s, "ito-functional-rewritten"));
    case RelationFamily::GEN_ITO_SPECIAL: {
      const Index& k = need_index(p.k, "gen-ito-special");
      return instantiate_gen_ito_special(
          k, need_int(p.kn1, "kn1", "gen-ito-special"),
          need_int(p.m, "m", "gen-ito-special"));
    }
    case RelationFamily::MIYAGAWA_FUNCTIONAL: {
      // k here is the final-chain length: a single integer
      int k_len = 0;
      if (p.kn1)
        k_len = *p.kn1;
      else {
        const Index& k = need_index(p.k, "miyagawa-functional");
        if (k.size() != 1)
          fail(Errc::domain,
               "miyagawa-functional: k is a single integer (chain length)");
        k_len = k[0];
      }
      return instantiate_miyagawa_functional(
          need_int(p.l, "l", "miyagawa-functional"), k_len,
          need_s(p.s, "miyagawa-functional"));
    }
    case RelationFamily::ITO_GENERAL_FUNCTIONAL: {
      const Index& k = need_index(p.k, "ito-general");
      check_r(p.r, k, "ito-general");
      return instantiate_ito_general_functional(
          need_int(p.l, "l", "ito-general"), k, need_s(p.s, "ito-general"));
    }
    case RelationFamily::GEN_ITO_GENERAL_FUNCTIONAL: {
      const Index& k = need_index(p.k, "gen-ito-general");
      return instantiate_gen_ito_general_functional(
          need_int(p.l, "l", "gen-ito-general"), k,
          need_int(p.kn1, "kn1", "gen-ito-general"),
          need_s(p.s, "gen-ito-general"));
    }
  }
  fail(Errc::internal, "instantiate: unknown family");
}

}  // namespace mzv
