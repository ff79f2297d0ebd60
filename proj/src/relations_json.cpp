/// @file relations_json.cpp
/// @brief JSON serialization of relations and verification reports.
///
/// Schema "mzv-relation/1":
///   {
///     "schema": "mzv-relation/1",
///     "name": "...",
///     "params": { "<name>": "<value>", ... },      // insertion-ordered
///     "terms": [ { "scalar": "p/q",
///                  "factors": [ {"kind": "mt", "payload": "0,1;3"}, ... ] } ],
///     "report": { ... }                            // optional, output-only
///   }
/// Field order is stable (ordered maps); doubles round-trip.

#include "mzv/relations.hpp"

#include <json.hpp>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "mzv-relation/1";

ojson atom_to_json(const Atom& a) {
  const std::string text = atom_text(a);
  const std::size_t colon = text.find(':');
  return ojson{{"kind", text.substr(0, colon)},
               {"payload", text.substr(colon + 1)}};
}

Atom atom_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      !j.contains("payload") || !j["payload"].is_string())
    fail(Errc::parse, "relation JSON: factor needs string kind and payload");
  return parse_atom(j["kind"].get<std::string>() + ":" +
                    j["payload"].get<std::string>());
}

}  // namespace

std::string relation_to_json(const Relation& r,
                             const VerificationReport* report, int indent) {
  ojson doc;
  doc["schema"] = kSchema;
  doc["name"] = r.name;
  ojson params = ojson::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  doc["params"] = std::move(params);
  ojson terms = ojson::array();
  for (const Term& t : r.terms) {
    ojson term;
    term["scalar"] = rational_to_string(t.scalar);
    ojson factors = ojson::array();
    for (const Atom& a : t.factors) factors.push_back(atom_to_json(a));
    term["factors"] = std::move(factors);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  if (report) {
    ojson rep;
    rep["lhs"] = report->lhs;
    rep["residual"] = report->residual;
    rep["bound"] = report->bound;
    rep["tolerance"] = report->tolerance;
    rep["pass"] = report->pass;
    rep["truncated"] = report->truncated;
    rep["worst_term"] = report->worst_term;
    ojson diags = ojson::array();
    for (const TermDiag& d : report->term_diags)
      diags.push_back(
          ojson{{"term", d.text}, {"value", d.value}, {"err", d.err}});
    rep["terms"] = std::move(diags);
    doc["report"] = std::move(rep);
  }
  return doc.dump(indent);
}

Relation relation_from_json(const std::string& text) {
  ojson doc = ojson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    fail(Errc::parse, "relation JSON: malformed document");
  if (!doc.is_object() || doc.value("schema", "") != kSchema)
    fail(Errc::parse, std::string("relation JSON: expected schema '") +
                          kSchema + "'");
  Relation r;
  r.name = doc.value("name", "");
  if (doc.contains("params")) {
    if (!doc["params"].is_object())
      fail(Errc::parse, "relation JSON: params must be an object");
    for (const auto& [key, value] : doc["params"].items()) {
      if (!value.is_string())
        fail(Errc::parse, "relation JSON: param values must be strings");
      r.params.emplace_back(key, value.get<std::string>());
    }
  }
  if (!doc.contains("terms") || !doc["terms"].is_array() ||
      doc["terms"].empty())
    fail(Errc::parse, "relation JSON: nonempty terms array required");
  for (const ojson& tj : doc["terms"]) {
    if (!tj.is_object() || !tj.contains("scalar") ||
        !tj["scalar"].is_string() || !tj.contains("factors") ||
        !tj["factors"].is_array())
      fail(Errc::parse,
           "relation JSON: each term needs a scalar string and factors array");
    std::vector<Atom> factors;
    for (const ojson& fj : tj["factors"]) factors.push_back(atom_from_json(fj));
    r.terms.push_back(make_term(
        rational_from_string(tj["scalar"].get<std::string>()),
        std::move(factors)));
  }
  return r;
}

}  // namespace mzv
