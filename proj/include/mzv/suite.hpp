#pragma once
/// @file suite.hpp
/// @brief The acceptance matrix: every shipped identity family exercised at
///        pinned parameter grids with pinned tolerances.
///
/// Check groups (names are stable identifiers, dot-separated):
///   constants.*            nested-sum evaluator vs frozen reference constants
///   li-tail.*              integral tail identities for the three polylog
///                          factor shapes (quadrature vs closed form)
///   fterm.*                decomposition of Li_k(1-e^{-t}) into f-terms,
///                          the product form, and direct-quadrature pins
///   ito-special.*          product-family xi at integer arguments
///   ito-functional.*       product-family functional identity
///   genito-special.*       chained-family xi at integer arguments
///   miyagawa-functional.*  chained-family functional identity (+ exact
///                          degeneration to the product-family identity)
///   ito-general.*          product-family identity at general exponents
///                          (+ exact agreement with the solved form)
///   genito-general.*       chained-family identity at general exponents
///   duality.*              dual-index equality and involution
///   shuffle.*              shuffle products and block-sum reductions
///   specialization.*       block-structured evaluator degenerations
///   negative-control       a sign-flipped relation must fail
///
/// Every check carries the evaluated quantity, the residual, the certified
/// error bound, the criterion tolerance, a pass flag, and wall-clock millis.
/// `run_suite` returns the checks sorted by name (deterministic regardless
/// of execution order).

#include <string>
#include <vector>

#include "mzv/config.hpp"

namespace mzv {

struct SuiteCheck {
  std::string name;        ///< stable dotted identifier
  double lhs = 0.0;        ///< evaluated quantity (relation sum / tested value)
  double residual = 0.0;   ///< deviation from the asserted identity
  double bound = 0.0;      ///< certified numeric error accompanying residual
  double tolerance = 0.0;  ///< criterion tolerance granted on top of bound
  bool pass = false;
  double millis = 0.0;
  std::string detail;      ///< one-line diagnostic (empty when unremarkable)
};

struct SuiteOptions {
  std::string filter;   ///< substring filter on check names; empty = all
  EvalConfig config{};  ///< evaluation configuration shared by all checks
};

/// Runs the acceptance matrix (checks matching `filter`); sorted by name.
std::vector<SuiteCheck> run_suite(const SuiteOptions& opt = {});

/// CSV rows under the header `check,lhs,residual,bound,pass,millis`.  The
/// bound column is the effective allowance (certified bound + tolerance),
/// so pass == (residual <= bound) row by row (negative-control inverted).
std::string suite_csv(const std::vector<SuiteCheck>& checks);

/// Aligned human-readable table with a one-line summary at the end.
std::string suite_table(const std::vector<SuiteCheck>& checks);

}  // namespace mzv
