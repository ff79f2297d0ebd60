// mzv — command-line frontend for the certified zeta / xi evaluation library.
//
// Subcommands:
//   eval     evaluate one zeta-family value (nested / independent / chained /
//            block-structured)
//   xi       evaluate one integral-transform xi value
//   verify   instantiate an identity family at given parameters and check it
//   compose  substitute integer special values into a functional identity and
//            check the resulting pure zeta relation
//   reduce   rewrite a zero-head block sum as a shuffle combination of nested
//            sums and check it
//   dual     print the dual of an admissible index
//   suite    run the full acceptance matrix
//
// Exit codes: 0 success / verification passed; 1 verification failed;
// 2 usage or evaluation error (one-line diagnostic on stderr).

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/cache.hpp"
#include "mzv/config.hpp"
#include "mzv/errors.hpp"
#include "mzv/index.hpp"
#include "mzv/relations.hpp"
#include "mzv/suite.hpp"
#include "mzv/xi.hpp"

namespace {

using nlohmann::ordered_json;

mzv::Index parse_plain_index(const std::string& text) {
  if (text.empty()) return {};
  const mzv::ParsedIndex pi = mzv::parse_index(text);
  if (pi.is_gmt)
    mzv::fail(mzv::Errc::parse, "expected a plain comma-separated index");
  return pi.plain;
}

// ---------------------------------------------------------------------------
// Shared parameter flags for verify / compose.
// ---------------------------------------------------------------------------

struct ParamFlags {
  std::string k;
  int r = 0, l = 0, m = 0, kn1 = 0;
  double s = 0.0;
  CLI::Option* ok = nullptr;
  CLI::Option* orr = nullptr;
  CLI::Option* ol = nullptr;
  CLI::Option* om = nullptr;
  CLI::Option* okn1 = nullptr;
  CLI::Option* os = nullptr;

  void attach(CLI::App* cmd) {
    ok = cmd->add_option("--k", k, "index, comma-separated (e.g. \"2,3\")");
    orr = cmd->add_option("--r", r, "repetition count");
    ol = cmd->add_option("--l", l, "leading-ones count");
    om = cmd->add_option("--m", m, "special-value order");
    okn1 = cmd->add_option("--kn1", kn1, "final chained exponent");
    os = cmd->add_option("--s", s, "real argument of the identity");
  }

  mzv::RelationParams build() const {
    mzv::RelationParams p;
    if (ok->count()) p.k = parse_plain_index(k);
    if (orr->count()) p.r = r;
    if (ol->count()) p.l = l;
    if (om->count()) p.m = m;
    if (okn1->count()) p.kn1 = kn1;
    if (os->count()) p.s = s;
    return p;
  }
};

// ---------------------------------------------------------------------------
// Output helpers.
// ---------------------------------------------------------------------------

void print_value(const std::string& label, const mzv::Approx& v, bool json) {
  if (json) {
    ordered_json doc;
    doc["atom"] = label;
    doc["value"] = v.value;
    doc["err"] = v.err;
    doc["truncated"] = v.truncated;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("%s = %.15g +/- %.3g%s\n", label.c_str(), v.value, v.err,
                v.truncated ? "  (budget truncated)" : "");
  }
}

void print_report(const mzv::Relation& rel, const mzv::VerificationReport& rep,
                  bool json) {
  if (json) {
    std::printf("%s\n", mzv::relation_to_json(rel, &rep).c_str());
    return;
  }
  std::printf("relation %s\n", rel.name.c_str());
  for (const auto& [key, val] : rel.params)
    std::printf("  %s = %s\n", key.c_str(), val.c_str());
  for (const auto& d : rep.term_diags)
    std::printf("  % .15e +/- %.3e  %s\n", d.value, d.err, d.text.c_str());
  std::printf("lhs %.6e  residual %.6e  bound %.6e  tolerance %.6e  -> %s\n",
              rep.lhs, rep.residual, rep.bound, rep.tolerance,
              rep.pass ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mzv: certified evaluation of nested, independent-head, chained, and "
      "block-structured zeta sums, their integral transforms, and the "
      "identities connecting them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mzv::kEngineVersion));

  // Shared evaluation flags (accepted before or after the subcommand).
  std::int64_t cutoff = 0, budget = 0;
  double tol = -1.0;
  bool json = false, no_cache = false;
  app.add_option("--cutoff", cutoff,
                 "fixed per-dimension series cutoff (0 = automatic)");
  app.add_option("--budget", budget, "series term budget");
  app.add_option(
      "--tol", tol,
      "eval/xi: series error target (default 1e-9); relation commands: "
      "acceptance slack on top of the certified bound (default 1e-6)");
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--no-cache", no_cache, "bypass the persistent value cache");

  // eval ---------------------------------------------------------------
  auto* c_eval = app.add_subcommand("eval", "evaluate a zeta-family value");
  c_eval->fallthrough();
  std::string eval_family, eval_index;
  c_eval->add_option("family", eval_family, "ez | mt | miyagawa | gmt")
      ->required();
  c_eval
      ->add_option("index", eval_index,
                   "index text: \"1,2\" (ez), \"1,2;3\" (mt heads;total), "
                   "\"1,2;1,3\" (miyagawa heads;chain), "
                   "\"(1,2),3;2\" (gmt blocks;chain)")
      ->required();

  // xi -----------------------------------------------------------------
  auto* c_xi = app.add_subcommand("xi", "evaluate an integral-transform xi");
  c_xi->fallthrough();
  std::string xi_family, xi_k;
  int xi_kn1 = 0;
  double xi_s = 0.0;
  c_xi->add_option("family", xi_family, "ak | ito | gen-ito")->required();
  auto* xi_k_opt =
      c_xi->add_option("k", xi_k, "index, comma-separated (may be empty)");
  c_xi->add_option("--s", xi_s, "argument s >= 1")->required();
  c_xi->add_option("--kn1", xi_kn1, "final chained exponent (gen-ito)");

  // verify ---------------------------------------------------------------
  auto* c_verify =
      app.add_subcommand("verify", "instantiate and check an identity");
  c_verify->fallthrough();
  std::string verify_family;
  c_verify
      ->add_option("family", verify_family,
                   "akz-special | ito-special | ito-functional | "
                   "ito-functional-rewritten | gen-ito-special | "
                   "miyagawa-functional | ito-general | gen-ito-general")
      ->required();
  ParamFlags verify_pf;
  verify_pf.attach(c_verify);

  // compose --------------------------------------------------------------
  auto* c_compose = app.add_subcommand(
      "compose",
      "substitute special values into a functional identity and check the "
      "resulting pure zeta relation");
  c_compose->fallthrough();
  std::string comp_functional, comp_special;
  c_compose->add_option("functional", comp_functional, "functional family")
      ->required();
  c_compose->add_option("special", comp_special, "special-value family")
      ->required();
  ParamFlags comp_pf;
  comp_pf.attach(c_compose);
  comp_pf.om->required();

  // reduce ---------------------------------------------------------------
  auto* c_reduce = app.add_subcommand(
      "reduce",
      "rewrite a zero-head block sum as nested sums via the word shuffle");
  c_reduce->fallthrough();
  std::string reduce_atom;
  c_reduce
      ->add_option("atom", reduce_atom,
                   "atom text, e.g. \"mt:0,2,2;2\" or \"gmt:0,(1,2);2\"")
      ->required();

  // dual -----------------------------------------------------------------
  auto* c_dual =
      app.add_subcommand("dual", "print the dual of an admissible index");
  c_dual->fallthrough();
  std::string dual_index_text;
  c_dual->add_option("index", dual_index_text, "admissible index, e.g. "
                     "\"1,2,2\"")
      ->required();

  // suite ----------------------------------------------------------------
  auto* c_suite = app.add_subcommand("suite", "run the acceptance matrix");
  c_suite->fallthrough();
  std::string suite_filter;
  bool suite_csv_out = false;
  c_suite->add_option("--filter", suite_filter,
                      "substring filter on check names");
  c_suite->add_flag("--csv", suite_csv_out,
                    "CSV output (check,lhs,residual,bound,pass,millis)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  mzv::EvalConfig cfg;
  if (cutoff > 0) cfg.cutoff = cutoff;
  if (budget > 0) cfg.budget = budget;
  cfg.use_cache = !no_cache;
  const double eval_tol = tol > 0.0 ? tol : cfg.tol;
  const double verify_tol = tol > 0.0 ? tol : 1e-6;

  try {
    if (*c_eval) {
      std::string prefix;
      if (eval_family == "ez")
        prefix = "ez";
      else if (eval_family == "mt")
        prefix = "mt";
      else if (eval_family == "miyagawa" || eval_family == "miy")
        prefix = "miy";
      else if (eval_family == "gmt")
        prefix = "gmt";
      else
        mzv::fail(mzv::Errc::parse,
                  "unknown family '" + eval_family +
                      "' (expected ez, mt, miyagawa, or gmt)");
      cfg.tol = eval_tol;
      const mzv::Atom atom = mzv::parse_atom(prefix + ":" + eval_index);
      print_value(mzv::atom_text(atom), mzv::evaluate_atom(atom, cfg), json);
      return 0;
    }

    if (*c_xi) {
      mzv::XiFamily fam;
      if (xi_family == "ak")
        fam = mzv::XiFamily::AK;
      else if (xi_family == "ito")
        fam = mzv::XiFamily::ITO;
      else if (xi_family == "gen-ito" || xi_family == "gi")
        fam = mzv::XiFamily::GEN_ITO;
      else
        mzv::fail(mzv::Errc::parse, "unknown xi family '" + xi_family +
                                        "' (expected ak, ito, or gen-ito)");
      cfg.tol = eval_tol;
      const mzv::Index k =
          xi_k_opt->count() ? parse_plain_index(xi_k) : mzv::Index{};
      const mzv::Atom atom = mzv::atom_xi(fam, k, xi_kn1, xi_s);
      print_value(mzv::atom_text(atom), mzv::evaluate_atom(atom, cfg), json);
      return 0;
    }

    if (*c_verify) {
      const mzv::Relation rel =
          mzv::instantiate(mzv::relation_family_from_name(verify_family),
                           verify_pf.build());
      const mzv::VerificationReport rep = mzv::verify(rel, cfg, verify_tol);
      print_report(rel, rep, json);
      return rep.pass ? 0 : 1;
    }

    if (*c_compose) {
      if (!comp_pf.om->count())
        mzv::fail(mzv::Errc::parse, "compose requires --m");
      const mzv::Relation rel = mzv::compose_value_relation(
          mzv::relation_family_from_name(comp_functional),
          mzv::relation_family_from_name(comp_special), comp_pf.build(),
          comp_pf.m);
      const mzv::VerificationReport rep = mzv::verify(rel, cfg, verify_tol);
      print_report(rel, rep, json);
      return rep.pass ? 0 : 1;
    }

    if (*c_reduce) {
      const mzv::Relation rel =
          mzv::reduce_gmt_shuffle(mzv::parse_atom(reduce_atom));
      const mzv::VerificationReport rep = mzv::verify(rel, cfg, verify_tol);
      print_report(rel, rep, json);
      return rep.pass ? 0 : 1;
    }

    if (*c_dual) {
      const mzv::Index k = parse_plain_index(dual_index_text);
      const mzv::Index d = mzv::dual_index(k);
      if (json) {
        ordered_json doc;
        doc["index"] = mzv::format_index(k);
        doc["dual"] = mzv::format_index(d);
        std::printf("%s\n", doc.dump(2).c_str());
      } else {
        std::printf("%s\n", mzv::format_index(d).c_str());
      }
      return 0;
    }

    if (*c_suite) {
      mzv::SuiteOptions opt;
      opt.filter = suite_filter;
      opt.config = cfg;
      const std::vector<mzv::SuiteCheck> checks = mzv::run_suite(opt);
      bool all = true;
      for (const auto& c : checks) all = all && c.pass;
      if (suite_csv_out) {
        std::fputs(mzv::suite_csv(checks).c_str(), stdout);
      } else if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks) {
          ordered_json row;
          row["check"] = c.name;
          row["lhs"] = c.lhs;
          row["residual"] = c.residual;
          row["bound"] = c.bound;
          row["tolerance"] = c.tolerance;
          row["pass"] = c.pass;
          row["millis"] = c.millis;
          if (!c.detail.empty()) row["detail"] = c.detail;
          arr.push_back(std::move(row));
        }
        std::printf("%s\n", arr.dump(2).c_str());
      } else {
        std::fputs(mzv::suite_table(checks).c_str(), stdout);
      }
      return all ? 0 : 1;
    }
  } catch (const mzv::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  std::fprintf(stderr, "error: no subcommand\n");
  return 2;
}
