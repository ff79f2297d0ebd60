/// @file relations.cpp
/// @brief Atom factories with canonicalization, canonical text and parsing,
///        cached atom evaluation, term/relation evaluation and verification,
///        and exact term collection.

#include "mzv/relations.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mzv/cache.hpp"
#include "mzv/convergence.hpp"
#include "mzv/errors.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"

namespace mzv {

namespace {

/// Shortest round-trip text for a real; integers print bare ("3", not "3.0").
std::string fmt_real(double x) {
  if (std::rint(x) == x && std::fabs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) fail(Errc::internal, "fmt_real: to_chars failed");
  return std::string(buf, ptr);
}

double parse_real(const std::string& text) {
  if (text.empty()) fail(Errc::parse, "empty real in atom text");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v))
    fail(Errc::parse, "bad real '" + text + "' in atom text");
  return v;
}

std::string reals_csv(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_real(v[i]);
  }
  return out;
}

std::vector<double> parse_reals_csv(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    out.push_back(parse_real(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// True when x is an exactly representable smallish integer.
bool integral(double x, long long& out) {
  if (std::rint(x) != x || std::fabs(x) > 1e12) return false;
  out = static_cast<long long>(x);
  return true;
}

void require_heads(const Index& heads, const char* what) {
  if (heads.empty()) fail(Errc::domain, std::string(what) + ": empty heads");
  for (int h : heads)
    if (h < 0) fail(Errc::domain, std::string(what) + ": negative head");
}

void require_convergent(const ConvergenceResult& c, const std::string& text) {
  if (!c)
    fail(Errc::divergent, "divergent atom " + text + " (" +
                              c.failed_condition + ")");
}

}  // namespace

/// ---- factories -------------------------------------------------------------

Atom atom_zeta_single(int n) {
  if (n < 2) fail(Errc::domain, "single zeta needs an integer argument >= 2");
  Atom a;
  a.kind = AtomKind::ZETA_SINGLE;
  a.j = n;
  return a;
}

Atom atom_zeta_ez(const Index& k) {
  if (k.empty()) fail(Errc::domain, "nested atom: empty index");
  for (int e : k)
    if (e < 0) fail(Errc::domain, "nested atom: negative entry");
  require_convergent(check_ez(k), "ez:" + format_index(k));
  if (k.size() == 1) return atom_zeta_single(k[0]);
  Atom a;
  a.kind = AtomKind::ZETA_EZ;
  a.index = k;
  return a;
}

Atom atom_zeta_mt(const Index& heads, double tail) {
  require_heads(heads, "independent-heads atom");
  Atom a;
  a.kind = AtomKind::ZETA_MT;
  a.index = heads;
  std::sort(a.index.begin(), a.index.end());
  a.final_block = {tail};
  require_convergent(check_mt(a.index, tail), atom_text(a));
  return a;
}

Atom atom_zeta_miyagawa(const Index& heads,
                        const std::vector<double>& final_block) {
  if (final_block.empty())
    fail(Errc::domain, "chained atom: empty final block");
  if (final_block.size() == 1) return atom_zeta_mt(heads, final_block[0]);
  require_heads(heads, "chained atom");
  Atom a;
  a.kind = AtomKind::ZETA_MIYAGAWA;
  a.index = heads;
  std::sort(a.index.begin(), a.index.end());
  a.final_block = final_block;
  require_convergent(check_miyagawa(a.index, a.final_block), atom_text(a));
  return a;
}

Atom atom_zeta_gmt(const std::vector<Index>& blocks,
                   const std::vector<double>& final_block) {
  std::vector<Index> bs;
  for (const Index& b : blocks)
    if (!b.empty()) bs.push_back(b);  // empty block = empty product, dropped
  if (bs.empty())
    fail(Errc::domain, "block-structured atom: no nonempty leading blocks");
  if (final_block.empty())
    fail(Errc::domain, "block-structured atom: empty final block");
  const bool all_singleton =
      std::all_of(bs.begin(), bs.end(),
                  [](const Index& b) { return b.size() == 1; });
  if (all_singleton) {
    Index heads;
    for (const Index& b : bs) heads.push_back(b[0]);
    return atom_zeta_miyagawa(heads, final_block);
  }
  std::sort(bs.begin(), bs.end());  // block groups are independent: symmetric
  Atom a;
  a.kind = AtomKind::ZETA_GMT;
  a.blocks = std::move(bs);
  a.final_block = final_block;
  require_convergent(check_gmt(a.blocks, a.final_block), atom_text(a));
  return a;
}

Atom atom_xi(XiFamily family, const Index& k, int kn1, double s) {
  if (family == XiFamily::GEN_ITO && kn1 == 0) family = XiFamily::ITO;
  long long si = 0;
  if (family == XiFamily::ITO && k.empty() && integral(s, si) && si >= 2)
    return atom_zeta_single(static_cast<int>(si));
  Atom a;
  a.kind = AtomKind::XI;
  a.xi_family = family;
  a.index = k;
  if (family != XiFamily::AK)  // product / chained families are symmetric
    std::sort(a.index.begin(), a.index.end());
  a.kn1 = (family == XiFamily::GEN_ITO) ? kn1 : 0;
  a.s = s;
  XiSpec spec;
  spec.family = a.xi_family;
  spec.k = a.index;
  spec.kn1 = a.kn1;
  spec.s = a.s;
  spec.validate();
  return a;
}

Atom atom_gamma_ratio(double s, int j) {
  if (j < 0) fail(Errc::domain, "gamma ratio needs j >= 0");
  Atom a;
  a.kind = AtomKind::GAMMA_RATIO;
  a.s = s;
  a.j = j;
  return a;
}

Atom atom_binom(double s, int j) {
  if (j < 0) fail(Errc::domain, "binomial needs j >= 0");
  Atom a;
  a.kind = AtomKind::BINOM;
  a.s = s;
  a.j = j;
  return a;
}

/// ---- canonical text ---------------------------------------------------------

std::string atom_text(const Atom& a) {
  switch (a.kind) {
    case AtomKind::ZETA_SINGLE:
      return "z:" + std::to_string(a.j);
    case AtomKind::ZETA_EZ:
      return "ez:" + format_index(a.index);
    case AtomKind::ZETA_MT:
      return "mt:" + format_index(a.index) + ";" + fmt_real(a.final_block[0]);
    case AtomKind::ZETA_MIYAGAWA:
      return "miy:" + format_index(a.index) + ";" + reals_csv(a.final_block);
    case AtomKind::ZETA_GMT: {
      std::string out = "gmt:";
      for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (i) out += ',';
        if (a.blocks[i].size() == 1)
          out += format_index(a.blocks[i]);
        else
          out += "(" + format_index(a.blocks[i]) + ")";
      }
      return out + ";" + reals_csv(a.final_block);
    }
    case AtomKind::XI: {
      std::string fam;
      switch (a.xi_family) {
        case XiFamily::AK: fam = "ak"; break;
        case XiFamily::ITO: fam = "ito"; break;
        case XiFamily::GEN_ITO: fam = "gi"; break;
      }
      std::string out = "xi:" + fam + ":" + format_index(a.index);
      if (a.xi_family == XiFamily::GEN_ITO)
        out += "/" + std::to_string(a.kn1);
      return out + "|s=" + fmt_real(a.s);
    }
    case AtomKind::GAMMA_RATIO:
      return "gr:s=" + fmt_real(a.s) + ",j=" + std::to_string(a.j);
    case AtomKind::BINOM:
      return "bin:s=" + fmt_real(a.s) + ",j=" + std::to_string(a.j);
  }
  fail(Errc::internal, "atom_text: unknown kind");
}

namespace {

std::pair<std::string, std::string> split_once(const std::string& text,
                                               char sep, const char* what) {
  const std::size_t pos = text.find(sep);
  if (pos == std::string::npos)
    fail(Errc::parse, std::string("atom text missing '") + sep + "' in " +
                          what + ": " + text);
  return {text.substr(0, pos), text.substr(pos + 1)};
}

Index parse_plain(const std::string& text, const char* what) {
  ParsedIndex p = parse_index(text);
  if (p.is_gmt)
    fail(Errc::parse, std::string(what) + ": expected a plain index: " + text);
  return p.plain;
}

std::pair<double, int> parse_sj(const std::string& payload) {
  const auto [s_part, j_part] = split_once(payload, ',', "s/j payload");
  if (s_part.rfind("s=", 0) != 0 || j_part.rfind("j=", 0) != 0)
    fail(Errc::parse, "expected 's=...,j=...' payload: " + payload);
  const double s = parse_real(s_part.substr(2));
  const int j = static_cast<int>(parse_real(j_part.substr(2)));
  return {s, j};
}

}  // namespace

Atom parse_atom(const std::string& text) {
  const auto [tag, payload] = split_once(text, ':', "atom");
  if (tag == "z") return atom_zeta_single(static_cast<int>(parse_real(payload)));
  if (tag == "ez") return atom_zeta_ez(parse_plain(payload, "ez atom"));
  if (tag == "mt") {
    const auto [heads, tail] = split_once(payload, ';', "mt atom");
    return atom_zeta_mt(parse_plain(heads, "mt heads"), parse_real(tail));
  }
  if (tag == "miy") {
    const auto [heads, fin] = split_once(payload, ';', "chained atom");
    return atom_zeta_miyagawa(parse_plain(heads, "chained heads"),
                              parse_reals_csv(fin));
  }
  if (tag == "gmt") {
    const auto [lead, fin] = split_once(payload, ';', "block atom");
    // reuse the index grammar for the block list with a dummy final block
    ParsedIndex p = parse_index(lead + ";1");
    if (!p.is_gmt) fail(Errc::parse, "block atom: bad leading blocks: " + lead);
    return atom_zeta_gmt(p.gmt.blocks, parse_reals_csv(fin));
  }
  if (tag == "xi") {
    const auto [fam, rest] = split_once(payload, ':', "xi atom");
    const auto [idx_part, s_part] = split_once(rest, '|', "xi atom");
    if (s_part.rfind("s=", 0) != 0)
      fail(Errc::parse, "xi atom: expected '|s=...': " + text);
    const double s = parse_real(s_part.substr(2));
    if (fam == "ak")
      return atom_xi(XiFamily::AK, parse_plain(idx_part, "xi index"), 0, s);
    if (fam == "ito") {
      Index k;
      if (!idx_part.empty()) k = parse_plain(idx_part, "xi index");
      return atom_xi(XiFamily::ITO, k, 0, s);
    }
    if (fam == "gi") {
      const auto [idx, kn1] = split_once(idx_part, '/', "xi final count");
      return atom_xi(XiFamily::GEN_ITO, parse_plain(idx, "xi index"),
                     static_cast<int>(parse_real(kn1)), s);
    }
    fail(Errc::parse, "xi atom: unknown family '" + fam + "'");
  }
  if (tag == "gr") {
    const auto [s, j] = parse_sj(payload);
    return atom_gamma_ratio(s, j);
  }
  if (tag == "bin") {
    const auto [s, j] = parse_sj(payload);
    return atom_binom(s, j);
  }
  fail(Errc::parse, "unknown atom kind '" + tag + "'");
}

bool Atom::operator==(const Atom& o) const {
  return atom_text(*this) == atom_text(o);
}

bool Atom::operator<(const Atom& o) const {
  return atom_text(*this) < atom_text(o);
}

/// ---- terms -------------------------------------------------------------------

Term make_term(const Rational& scalar, std::vector<Atom> factors) {
  std::sort(factors.begin(), factors.end());
  Term t;
  t.scalar = scalar;
  t.factors = std::move(factors);
  return t;
}

std::string term_text(const Term& t) {
  std::string out = rational_to_string(t.scalar);
  for (const Atom& a : t.factors) out += " * " + atom_text(a);
  return out;
}

std::vector<Term> collect_terms(std::vector<Term> terms) {
  std::map<std::string, Term> merged;
  for (Term& t : terms) {
    std::sort(t.factors.begin(), t.factors.end());
    std::string key;
    for (const Atom& a : t.factors) key += atom_text(a) + "|";
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(std::move(key), std::move(t));
    else
      it->second.scalar += t.scalar;
  }
  std::vector<Term> out;
  for (auto& [key, t] : merged)
    if (t.scalar != 0) out.push_back(std::move(t));
  return out;
}

/// ---- evaluation ----------------------------------------------------------------

Approx evaluate_atom(const Atom& a, const EvalConfig& cfg) {
  cfg.validate();
  switch (a.kind) {
    case AtomKind::ZETA_SINGLE:
      return riemann_zeta(static_cast<double>(a.j));
    case AtomKind::GAMMA_RATIO:
      return gamma_ratio(a.s, a.j);
    case AtomKind::BINOM: {
      const Approx g = gamma_ratio(a.s, a.j);
      const double inv_fact =
          rational_to_double(Rational(1, factorial(a.j)));
      // one extra ulp for the rational->double conversion itself
      return g.scaled(inv_fact).widened(std::fabs(g.value * inv_fact) *
                                        2.220446049250313e-16);
    }
    default:
      break;
  }

  const std::string key = cache_key(atom_text(a), cfg);
  if (cfg.use_cache) {
    if (auto hit = CacheStore::instance().lookup(key);
        hit && hit->config_fingerprint == cfg.fingerprint() &&
        hit->engine_version == kEngineVersion)
      return Approx(hit->value, hit->err);
  }

  Approx v;
  switch (a.kind) {
    case AtomKind::ZETA_EZ:
      v = eval_zeta_ez(a.index, cfg);
      break;
    case AtomKind::ZETA_MT:
      v = eval_zeta_mt(a.index, a.final_block[0], cfg);
      break;
    case AtomKind::ZETA_MIYAGAWA:
      v = eval_zeta_miyagawa(a.index, a.final_block, cfg);
      break;
    case AtomKind::ZETA_GMT:
      v = eval_zeta_gmt(a.blocks, a.final_block, cfg);
      break;
    case AtomKind::XI: {
      XiSpec spec;
      spec.family = a.xi_family;
      spec.k = a.index;
      spec.kn1 = a.kn1;
      spec.s = a.s;
      v = eval_xi(spec, cfg);
      break;
    }
    default:
      fail(Errc::internal, "evaluate_atom: unhandled kind");
  }

  if (cfg.use_cache && !v.truncated)
    CacheStore::instance().store(
        {key, v.value, v.err, cfg.fingerprint(), kEngineVersion});
  return v;
}

Approx evaluate_term(const Term& t, const EvalConfig& cfg) {
  Approx acc = Approx::exact(1.0);
  for (const Atom& a : t.factors) acc = acc * evaluate_atom(a, cfg);
  const double sd = rational_to_double(t.scalar);
  // scaled() covers the multiply rounding; widen once more for the
  // rational->double conversion of the scalar itself
  return acc.scaled(sd).widened(std::fabs(acc.value * sd) *
                                2.220446049250313e-16);
}

VerificationReport verify(const Relation& r, const EvalConfig& cfg,
                          double tolerance) {
  VerificationReport rep;
  rep.name = r.name;
  rep.tolerance = tolerance;
  if (r.terms.empty()) fail(Errc::domain, "verify: relation has no terms");

  Approx sum = Approx::exact(0.0);
  bool eval_failed = false;
  for (const Term& t : r.terms) {
    TermDiag d;
    d.text = term_text(t);
    try {
      const Approx v = evaluate_term(t, cfg);
      d.value = v.value;
      d.err = v.err;
      sum += v;
    } catch (const Error& e) {
      d.value = std::numeric_limits<double>::quiet_NaN();
      d.err = std::numeric_limits<double>::infinity();
      d.text += "  [evaluation error: " + std::string(e.what()) + "]";
      eval_failed = true;
    }
    rep.term_diags.push_back(std::move(d));
  }

  rep.lhs = sum.value;
  rep.residual = std::fabs(sum.value);
  rep.bound = sum.err;
  rep.truncated = sum.truncated;
  rep.pass = !eval_failed && rep.residual <= rep.bound + tolerance;

  for (std::size_t i = 0; i < rep.term_diags.size(); ++i)
    if (rep.worst_term < 0 ||
        rep.term_diags[i].err > rep.term_diags[rep.worst_term].err)
      rep.worst_term = static_cast<int>(i);
  return rep;
}

}  // namespace mzv
