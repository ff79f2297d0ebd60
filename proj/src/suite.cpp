#include "mzv/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/index.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/relations.hpp"
#include "mzv/series.hpp"
#include "mzv/tails.hpp"
#include "mzv/xi.hpp"
#include "polylog_deep.hpp"

namespace mzv {

namespace {

// Frozen reference constants (independent of every engine under test).
constexpr double kZeta2 = 1.6449340668482264365;  // pi^2/6
constexpr double kZeta3 = 1.2020569031595942854;

// ---------------------------------------------------------------------------
// Check runner: filtering, timing, exception capture.
// ---------------------------------------------------------------------------

struct Runner {
  std::string filter;
  EvalConfig cfg;
  std::vector<SuiteCheck> out;

  bool selected(const std::string& name) const {
    return filter.empty() || name.find(filter) != std::string::npos;
  }

  void add(const std::string& name,
           const std::function<void(SuiteCheck&)>& body) {
    if (!selected(name)) return;
    SuiteCheck c;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.residual = std::numeric_limits<double>::quiet_NaN();
      c.detail = std::string("evaluation error: ") + e.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    out.push_back(std::move(c));
  }
};

// ---------------------------------------------------------------------------
// Fill helpers.
// ---------------------------------------------------------------------------

/// got vs a reference carrying its own certified error.
void fill_pair(SuiteCheck& c, const Approx& got, const Approx& want,
               double tol) {
  c.lhs = got.value;
  c.residual = std::abs(got.value - want.value);
  c.bound = got.err + want.err;
  c.tolerance = tol;
  c.pass = !got.truncated && !want.truncated &&
           c.residual <= c.bound + c.tolerance;
  if (got.truncated || want.truncated)
    c.detail = "budget truncation";
  else if (!c.pass)
    c.detail = "residual exceeds bound + tolerance";
}

/// got vs an exact reference value.
void fill_value(SuiteCheck& c, const Approx& got, double want, double tol) {
  fill_pair(c, got, Approx::exact(want), tol);
}

void fill_report(SuiteCheck& c, const VerificationReport& rep) {
  c.lhs = rep.lhs;
  c.residual = rep.residual;
  c.bound = rep.bound;
  c.tolerance = rep.tolerance;
  c.pass = rep.pass;
  if (!rep.pass) {
    c.detail = "relation residual exceeds bound + tolerance";
    if (rep.worst_term >= 0 &&
        rep.worst_term < static_cast<int>(rep.term_diags.size()))
      c.detail += "; worst term " + rep.term_diags[size_t(rep.worst_term)].text;
  } else if (rep.truncated) {
    c.detail = "budget truncation (bound widened, still within tolerance)";
  }
}

/// Exact term-multiset equality of two relations (no numerics): every term
/// of `a` must cancel against a term of `b`.
void fill_exact_match(SuiteCheck& c, Relation a, Relation b) {
  const size_t na = a.terms.size();
  for (auto& t : b.terms) t.scalar = -t.scalar;
  std::vector<Term> all = std::move(a.terms);
  all.insert(all.end(), b.terms.begin(), b.terms.end());
  const std::vector<Term> rest = collect_terms(std::move(all));
  c.lhs = double(na);
  c.residual = double(rest.size());
  c.bound = 0.0;
  c.tolerance = 0.0;
  c.pass = rest.empty();
  if (!rest.empty())
    c.detail = "uncancelled term: " + term_text(rest.front());
}

// ---------------------------------------------------------------------------
// Small formatting helpers for check names.
// ---------------------------------------------------------------------------

std::string fmt_k(const Index& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(k[i]);
  }
  return s;
}

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: evaluator vs frozen constants.
// ---------------------------------------------------------------------------

void add_constants(Runner& r) {
  r.add("constants.ez-2", [&](SuiteCheck& c) {
    fill_value(c, eval_zeta_ez(Index{2}, r.cfg), kZeta2, 1e-8);
  });
  r.add("constants.ez-1-2", [&](SuiteCheck& c) {
    fill_value(c, eval_zeta_ez(Index{1, 2}, r.cfg), kZeta3, 1e-6);
  });
}

// ---------------------------------------------------------------------------
// Criterion 2: integral tail identities.  For each factor shape F of the xi
// integrand,  int_0^inf F(t+u) / (e^{t+u} - 1) du  equals the closed form
//   nested:    zeta(k with last+1)      - Li_{k,last+1}(1 - e^{-t})
//   product:   zeta_MT(k; 1)            - Li_{k; 1}(1 - e^{-t})
//   chained:   zeta_MT(k; 2)            - Li_{k; 2}(1 - e^{-t}).
// ---------------------------------------------------------------------------

deep::Factor build_deep(const XiSpec& spec, const EvalConfig& cfg) {
  switch (spec.family) {
    case XiFamily::AK:
      return deep::build_nested(spec.k, cfg);
    case XiFamily::ITO:
      return deep::build_product(spec.k, cfg);
    case XiFamily::GEN_ITO:
      return deep::build_with_tail(spec.k, spec.kn1, cfg);
  }
  fail(Errc::internal, "suite: unknown xi family");
}

/// int_0^inf F(t+u) / (e^{t+u} - 1) du with a certified tail envelope.
Approx li_tail_integral(const XiSpec& spec, double t, const EvalConfig& cfg) {
  const deep::Factor F = build_deep(spec, cfg);
  const int pd = deep::poly_degree(F);

  EvalConfig node_cfg = cfg;
  node_cfg.tol = std::max(cfg.quad_target * 0.02, 1e-13);

  auto g = [&](double u) -> Approx {
    const double x = t + u;
    const Approx P = (x < deep::kTmin)
                         ? xi_polylog_factor(spec, x, PolylogRoute::SERIES,
                                             node_cfg)
                         : deep::eval(F, x);
    const double den = std::expm1(x);
    const double v = P.value / den;
    const double e = (P.err + std::abs(P.value) * 3e-16) / den;
    return Approx(v, e + std::abs(v) * 3e-16, P.truncated);
  };

  EvalConfig qcfg = cfg;
  qcfg.trunc_T = std::max(cfg.trunc_T, 8.0);
  const double T0 = qcfg.trunc_T;
  // For u >= T0:  |F(t+u)| <= cb (1+t+u)^pd  with cb taken at t+T0;
  // 1/(e^{t+u}-1) <= 1.06 e^{-t} e^{-u}  (since t+u >= 3);
  // (1+t+u)^pd <= u^pd e^{pd (1+t)/T0}.
  const double cb = deep::bound_coeff(F, t + T0);
  SemiAxisShape shape;
  shape.head_pow = 0.0;
  shape.tail_pow = double(pd);
  shape.tail_coeff =
      cb * 1.06 * std::exp(-t) * std::exp(double(pd) * (1.0 + t) / T0);
  shape.nonneg = true;
  return integrate_semiaxis(g, shape, qcfg);
}

void add_li_tail(Runner& r) {
  const std::vector<Index> ks = {{1}, {2}, {1, 2}};
  const double ts[] = {0.5, 1.0, 2.0};
  for (const Index& k : ks) {
    for (double t : ts) {
      const double z = -std::expm1(-t);
      const std::string suffix = "k=" + fmt_k(k) + ".t=" + fmt_g(t);

      r.add("li-tail.a." + suffix, [&](SuiteCheck& c) {
        XiSpec spec{XiFamily::AK, k, 0, 2.0};
        const Index kp = shift(k, End::Last, +1);
        const Approx want =
            eval_zeta_ez(kp, r.cfg) - eval_polylog_multi(kp, z, r.cfg);
        fill_pair(c, li_tail_integral(spec, t, r.cfg), want, 1e-7);
      });

      r.add("li-tail.b." + suffix, [&](SuiteCheck& c) {
        XiSpec spec{XiFamily::ITO, k, 0, 2.0};
        const Approx want =
            eval_zeta_mt(k, 1.0, r.cfg) -
            eval_polylog(PolylogKind::WITH_TAIL, k, z, 1, {}, r.cfg);
        fill_pair(c, li_tail_integral(spec, t, r.cfg), want, 1e-7);
      });

      r.add("li-tail.c." + suffix, [&](SuiteCheck& c) {
        XiSpec spec{XiFamily::GEN_ITO, k, 1, 2.0};
        const Approx want =
            eval_zeta_mt(k, 2.0, r.cfg) -
            eval_polylog(PolylogKind::WITH_TAIL, k, z, 2, {}, r.cfg);
        fill_pair(c, li_tail_integral(spec, t, r.cfg), want, 1e-7);
      });
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 3: the f-term decomposition of Li_k(1-e^{-t}), its product form,
// and direct-quadrature pins of individual f-terms.
// ---------------------------------------------------------------------------

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double both = left + right;
  if (depth <= 0 || std::abs(both - whole) < 15.0 * tol)
    return both + (both - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Plain adaptive Simpson on [a, b] for smooth reference integrands.
double simpson(const std::function<double(double)>& f, double a, double b,
               double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 24);
}

void add_fterm(Runner& r) {
  // Decomposition: sum_{j=0}^{2k-2} f(t; j, k) = Li_k(1 - e^{-t}).
  for (int k : {2, 3, 4}) {
    for (double t : {0.25, 1.0, 3.0}) {
      r.add("fterm.decomp.k=" + std::to_string(k) + ".t=" + fmt_g(t),
            [&](SuiteCheck& c) {
              Approx sum = Approx::exact(0.0);
              for (int j = 0; j <= 2 * k - 2; ++j)
                sum = sum + eval_f_term(t, j, k, r.cfg);
              const XiSpec spec{XiFamily::AK, Index{k}, 0, 2.0};
              fill_pair(c, sum,
                        xi_polylog_factor(spec, t, PolylogRoute::AUTO, r.cfg),
                        1e-7);
            });
    }
  }

  // Product form: sum over pairs (j1, j2) of f(t;j1,2) f(t;j2,3) equals
  // Li_2(1-e^{-t}) Li_3(1-e^{-t}).
  r.add("fterm.product.k=2-3.t=1", [&](SuiteCheck& c) {
    const double t = 1.0;
    Approx sum = Approx::exact(0.0);
    for (int j1 = 0; j1 <= 2; ++j1)
      for (int j2 = 0; j2 <= 4; ++j2)
        sum = sum + eval_f_term(t, j1, 2, r.cfg) * eval_f_term(t, j2, 3, r.cfg);
    const XiSpec spec{XiFamily::ITO, Index{2, 3}, 0, 2.0};
    fill_pair(c, sum, xi_polylog_factor(spec, t, PolylogRoute::AUTO, r.cfg),
              1e-6);
  });

  // Direct-quadrature pins at k = 3, t = 1 (z0 = e^{-1}).  Each reference is
  // computed from textbook integral representations only.
  const double t = 1.0;
  const double z0 = std::exp(-1.0);

  r.add("fterm.quad.j=0.k=3", [&](SuiteCheck& c) {
    fill_value(c, eval_f_term(t, 0, 3, r.cfg), kZeta3, 1e-6);
  });

  r.add("fterm.quad.j=1.k=3", [&](SuiteCheck& c) {
    // f(t;1,3) = -zeta(2) Li_1(e^{-t}),  Li_1(w0) = int_0^{w0} dw/(1-w).
    const double li1 =
        simpson([](double w) { return 1.0 / (1.0 - w); }, 0.0, z0, 1e-12);
    fill_pair(c, eval_f_term(t, 1, 3, r.cfg),
              Approx(-kZeta2 * li1, 1e-9), 1e-6);
  });

  r.add("fterm.quad.j=2.k=3", [&](SuiteCheck& c) {
    // f(t;2,3) = t Li_{1,1}(e^{-t}); iterated 2-D quadrature over the
    // simplex 0 < w1 < w2 < w0 of dw1 dw2 / ((1-w1)(1-w2)).
    auto inner = [](double w2) {
      return simpson([](double w) { return 1.0 / (1.0 - w); }, 0.0, w2, 1e-13);
    };
    const double li11 = simpson(
        [&](double w2) { return inner(w2) / (1.0 - w2); }, 0.0, z0, 1e-11);
    fill_pair(c, eval_f_term(t, 2, 3, r.cfg), Approx(t * li11, 1e-8), 1e-6);
  });

  r.add("fterm.quad.j=3.k=3", [&](SuiteCheck& c) {
    // f(t;3,3) = Li_{(1,2)}(e^{-t}) with the ascending word (1,2):
    // Li_{(1,2)}(z0) = int_0^{z0} log^2(1-w) / (2w) dw.  This pins the word
    // orientation: the reversed word (2,1) has a different integral.
    const double li12 = simpson(
        [](double w) {
          if (w <= 0.0) return 0.0;
          const double l = std::log1p(-w);
          return l * l / (2.0 * w);
        },
        0.0, z0, 1e-12);
    fill_pair(c, eval_f_term(t, 3, 3, r.cfg), Approx(li12, 1e-9), 1e-6);
  });

  r.add("fterm.quad.j=4.k=3", [&](SuiteCheck& c) {
    // f(t;4,3) = Li_{(2,1)}(e^{-t}) with the ascending word (2,1):
    // Li_{(2,1)}(z0) = int_0^{z0} Li_2(w) / (1-w) dw, Li_2 by its own series.
    auto li2 = [](double w) {
      double s = 0.0, p = w;
      for (int n = 1; n <= 64; ++n, p *= w) s += p / double(n * n);
      return s;
    };
    const double li21 = simpson(
        [&](double w) { return li2(w) / (1.0 - w); }, 0.0, z0, 1e-12);
    fill_pair(c, eval_f_term(t, 4, 3, r.cfg), Approx(li21, 1e-9), 1e-6);
  });
}

// ---------------------------------------------------------------------------
// Criteria 4-9: the identity families, each instantiated on its pinned grid
// and verified numerically.
// ---------------------------------------------------------------------------

void add_relation_check(Runner& r, const std::string& name,
                        const std::function<Relation()>& make, double tol) {
  r.add(name, [&](SuiteCheck& c) { fill_report(c, verify(make(), r.cfg, tol)); });
}

void add_ito_special(Runner& r) {
  const std::vector<Index> ks = {{1},    {2},    {3},    {1, 1}, {1, 2},
                                 {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (const Index& k : ks)
    for (int m = 0; m <= 2; ++m)
      add_relation_check(
          r, "ito-special.k=" + fmt_k(k) + ".m=" + std::to_string(m),
          [k, m] { return instantiate_ito_special(k, m); }, 1e-5);
}

void add_ito_functional(Runner& r) {
  for (int rr : {2, 3})
    for (int s : {2, 3})
      add_relation_check(
          r,
          "ito-functional.r=" + std::to_string(rr) + ".s=" + std::to_string(s),
          [rr, s] { return instantiate_ito_functional(rr, double(s)); }, 1e-5);
}

void add_genito_special(Runner& r) {
  const std::vector<std::pair<Index, int>> cases = {
      {{2}, 1}, {{2}, 2}, {{2, 2}, 1}};
  for (const auto& [k, kn1] : cases)
    for (int m = 0; m <= 2; ++m)
      add_relation_check(r,
                         "genito-special.k=" + fmt_k(k) +
                             ".kn1=" + std::to_string(kn1) +
                             ".m=" + std::to_string(m),
                         [k = k, kn1 = kn1, m] {
                           return instantiate_gen_ito_special(k, kn1, m);
                         },
                         1e-4);
}

void add_miyagawa_functional(Runner& r) {
  for (int l : {1, 2})
    for (int k : {1, 2})
      add_relation_check(
          r,
          "miyagawa-functional.l=" + std::to_string(l) +
              ".k=" + std::to_string(k),
          [l, k] { return instantiate_miyagawa_functional(l, k, 2.0); }, 1e-4);

  // k = 0 degenerates exactly (term multiset) to the product-family identity
  // at r = l + 1.
  for (int l : {1, 2})
    r.add("miyagawa-functional.k0-exact.l=" + std::to_string(l),
          [&, l](SuiteCheck& c) {
            fill_exact_match(c, instantiate_miyagawa_functional(l, 0, 2.0),
                             instantiate_ito_functional(l + 1, 2.0));
          });
}

void add_ito_general(Runner& r) {
  const std::vector<Index> ks = {{2}, {3}, {2, 2}, {2, 3}, {3, 3}};
  for (int l : {0, 1})
    for (const Index& k : ks)
      add_relation_check(
          r, "ito-general.l=" + std::to_string(l) + ".k=" + fmt_k(k),
          [l, k] { return instantiate_ito_general_functional(l, k, 2.0); },
          1e-4);

  // At l = 0, k = {2}^r the identity collapses term-by-term onto its solved
  // rewriting (exact rational coefficients, no numerics).
  for (int rr : {1, 2})
    r.add("ito-general.exact-rewritten.r=" + std::to_string(rr),
          [&, rr](SuiteCheck& c) {
            fill_exact_match(
                c,
                instantiate_ito_general_functional(0, Index(size_t(rr), 2),
                                                   2.0),
                instantiate_ito_functional_rewritten(rr, 2.0));
          });
}

void add_genito_general(Runner& r) {
  add_relation_check(
      r, "genito-general.l=0.k=2.kn1=1",
      [] { return instantiate_gen_ito_general_functional(0, Index{2}, 1, 2.0); },
      1e-4);
}

// ---------------------------------------------------------------------------
// Criterion 10: duality.
// ---------------------------------------------------------------------------

std::vector<Index> admissible_of_weight(int w) {
  std::vector<Index> out;
  for (int d = 1; d < w; ++d) {
    for (const auto& comp : compositions(w - d, d)) {
      Index k(comp.begin(), comp.end());
      for (int& e : k) ++e;
      if (admissible(k)) out.push_back(k);
    }
  }
  return out;
}

void add_duality(Runner& r) {
  for (int w = 2; w <= 6; ++w) {
    for (const Index& k : admissible_of_weight(w)) {
      r.add("duality.w=" + std::to_string(w) + ".k=" + fmt_k(k),
            [&, k](SuiteCheck& c) {
              Relation rel;
              rel.name = "duality";
              rel.terms.push_back(
                  make_term(Rational(1), {atom_zeta_ez(k)}));
              rel.terms.push_back(
                  make_term(Rational(-1), {atom_zeta_ez(dual_index(k))}));
              fill_report(c, verify(rel, r.cfg, 1e-6));
            });
    }
  }

  r.add("duality.involution-w10", [&](SuiteCheck& c) {
    long checked = 0, bad = 0;
    for (int w = 2; w <= 10; ++w) {
      for (const Index& k : admissible_of_weight(w)) {
        ++checked;
        const Index d = dual_index(k);
        if (!admissible(d) || weight(d) != w || dual_index(d) != k) ++bad;
      }
    }
    c.lhs = double(checked);
    c.residual = double(bad);
    c.bound = 0.0;
    c.tolerance = 0.0;
    c.pass = bad == 0 && checked == 511;  // sum over w<=10 of 2^{w-2}
    if (!c.pass) c.detail = "involution violated or census mismatch";
  });
}

// ---------------------------------------------------------------------------
// Criterion 11: shuffle products.
// ---------------------------------------------------------------------------

void add_shuffle(Runner& r) {
  r.add("shuffle.zeta2-squared", [&](SuiteCheck& c) {
    Relation rel;
    rel.name = "shuffle-zeta2-squared";
    rel.terms.push_back(make_term(
        Rational(1), {atom_zeta_single(2), atom_zeta_single(2)}));
    rel.terms.push_back(make_term(Rational(-2), {atom_zeta_ez({2, 2})}));
    rel.terms.push_back(make_term(Rational(-4), {atom_zeta_ez({1, 3})}));
    fill_report(c, verify(rel, r.cfg, 1e-6));
  });

  // Block-sum reductions: a free zero head turns the chained sum into a
  // shuffle combination of nested sums; each output relation must verify.
  r.add("shuffle.reduce.block-1-2", [&](SuiteCheck& c) {
    const Atom a = atom_zeta_gmt({{0}, {1, 2}}, {2.0});
    fill_report(c, verify(reduce_gmt_shuffle(a), r.cfg, 1e-6));
  });
  r.add("shuffle.reduce.heads-2-2", [&](SuiteCheck& c) {
    const Atom a = atom_zeta_mt({0, 2, 2}, 2.0);
    fill_report(c, verify(reduce_gmt_shuffle(a), r.cfg, 1e-6));
  });
  r.add("shuffle.reduce.heads-1-2", [&](SuiteCheck& c) {
    const Atom a = atom_zeta_mt({0, 1, 2}, 2.0);
    fill_report(c, verify(reduce_gmt_shuffle(a), r.cfg, 1e-6));
  });
}

// ---------------------------------------------------------------------------
// Criterion 12: block-structured evaluator degenerations.
// ---------------------------------------------------------------------------

void add_specialization(Runner& r) {
  struct Case {
    const char* num;
    std::vector<Index> blocks;
    std::vector<double> fin;
    std::function<Approx(const EvalConfig&)> other;
    const char* what;
  };
  const std::vector<Case> cases = {
      {"01", {{2}}, {3.0},
       [](const EvalConfig& c) { return eval_zeta_ez({5}, c); },
       "single group (2), chain (3) vs nested (5)"},
      {"02", {{1, 2}}, {2.0},
       [](const EvalConfig& c) { return eval_zeta_ez({1, 4}, c); },
       "group (1,2), chain (2) vs nested (1,4)"},
      {"03", {{1, 2}}, {2.0, 2.0},
       [](const EvalConfig& c) { return eval_zeta_ez({1, 4, 2}, c); },
       "group (1,2), chain (2,2) vs nested (1,4,2)"},
      {"04", {{1, 1, 2}}, {3.0},
       [](const EvalConfig& c) { return eval_zeta_ez({1, 1, 5}, c); },
       "group (1,1,2), chain (3) vs nested (1,1,5)"},
      {"05", {{1}}, {2.0},
       [](const EvalConfig& c) { return eval_zeta_ez({3}, c); },
       "single group (1), chain (2) vs nested (3)"},
      {"06", {{2, 2}}, {1.0, 2.0},
       [](const EvalConfig& c) { return eval_zeta_ez({2, 3, 2}, c); },
       "group (2,2), chain (1,2) vs nested (2,3,2)"},
      {"07", {{1}, {1}}, {2.0},
       [](const EvalConfig& c) { return eval_zeta_mt({1, 1}, 2.0, c); },
       "groups (1),(1) vs independent heads (1,1;2)"},
      {"08", {{2}, {3}}, {2.0},
       [](const EvalConfig& c) { return eval_zeta_mt({2, 3}, 2.0, c); },
       "groups (2),(3) vs independent heads (2,3;2)"},
      {"09", {{1}, {2}}, {1.0, 2.0},
       [](const EvalConfig& c) {
         return eval_zeta_miyagawa({1, 2}, {1.0, 2.0}, c);
       },
       "groups (1),(2), chain (1,2) vs chained heads"},
      {"10", {{3}}, {1.0, 2.0},
       [](const EvalConfig& c) {
         return eval_zeta_miyagawa({3}, {1.0, 2.0}, c);
       },
       "group (3), chain (1,2) vs chained heads"},
  };
  for (const auto& cs : cases) {
    r.add(std::string("specialization.") + cs.num, [&](SuiteCheck& c) {
      fill_pair(c, eval_zeta_gmt(cs.blocks, cs.fin, r.cfg), cs.other(r.cfg),
                1e-12);
      if (!c.pass) {
        if (!c.detail.empty()) c.detail += "; ";
        c.detail += cs.what;
      }
    });
  }
}

// ---------------------------------------------------------------------------
// Criterion 13: negative control.
// ---------------------------------------------------------------------------

void add_negative_control(Runner& r) {
  r.add("negative-control", [&](SuiteCheck& c) {
    Relation rel = instantiate_ito_special(Index{2}, 1);
    if (rel.terms.empty()) fail(Errc::internal, "control: empty relation");
    rel.terms.front().scalar = -rel.terms.front().scalar;
    const VerificationReport rep = verify(rel, r.cfg, 1e-5);
    c.lhs = rep.lhs;
    c.residual = rep.residual;
    c.bound = rep.bound;
    c.tolerance = rep.tolerance;
    c.pass = !rep.pass && rep.residual > rep.bound + rep.tolerance;
    if (!c.pass) c.detail = "sign-flipped relation unexpectedly verified";
  });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<SuiteCheck> run_suite(const SuiteOptions& opt) {
  Runner r;
  r.filter = opt.filter;
  r.cfg = opt.config;
  r.cfg.validate();

  add_constants(r);
  add_li_tail(r);
  add_fterm(r);
  add_ito_special(r);
  add_ito_functional(r);
  add_genito_special(r);
  add_miyagawa_functional(r);
  add_ito_general(r);
  add_genito_general(r);
  add_duality(r);
  add_shuffle(r);
  add_specialization(r);
  add_negative_control(r);

  std::sort(r.out.begin(), r.out.end(),
            [](const SuiteCheck& a, const SuiteCheck& b) {
              return a.name < b.name;
            });
  return std::move(r.out);
}

std::string suite_csv(const std::vector<SuiteCheck>& checks) {
  std::string out = "check,lhs,residual,bound,pass,millis\n";
  char buf[192];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, ",%.12g,%.12g,%.12g,%s,%.3f\n", c.lhs,
                  c.residual, c.bound + c.tolerance,
                  c.pass ? "true" : "false", c.millis);
    out += c.name;
    out += buf;
  }
  return out;
}

std::string suite_table(const std::vector<SuiteCheck>& checks) {
  size_t w = 4;
  for (const auto& c : checks) w = std::max(w, c.name.size());
  std::string out;
  char buf[256];
  size_t passed = 0;
  double total_ms = 0.0;
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf,
                  "%s  %-*s  residual %11.4e  allow %11.4e  %8.1f ms\n",
                  c.pass ? "PASS" : "FAIL", int(w), c.name.c_str(), c.residual,
                  c.bound + c.tolerance, c.millis);
    out += buf;
    if (!c.pass && !c.detail.empty()) {
      out += "      ";
      out += c.detail;
      out += '\n';
    }
    passed += c.pass ? 1 : 0;
    total_ms += c.millis;
  }
  std::snprintf(buf, sizeof buf,
                "%zu checks: %zu passed, %zu failed  (total %.1f s)\n",
                checks.size(), passed, checks.size() - passed,
                total_ms / 1000.0);
  out += buf;
  return out;
}

}  // namespace mzv
