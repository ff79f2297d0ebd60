/// @file acceptance.cpp
/// @brief Acceptance gate: runs the full verification suite once and asserts
///        every check in each criterion group passes, with the group sizes
///        pinned so silently dropped checks also fail the gate.
///
/// Groups (one TEST_CASE each):
///   constants            frozen low-weight nested values
///   li-tail              exponential-argument integral identities
///   fterm                decomposition of the polylog factors
///   ito-special          product-family xi at integer arguments
///   ito-functional       product-family functional identity
///   genito-special       chained-family xi at integer arguments
///   miyagawa-functional  chained functional identity (+ exact k=0 match)
///   ito-general          general product functional (+ exact rewrite match)
///   genito-general       general chained functional
///   duality              reversal-complement involution
///   shuffle              product expansion and block reduction
///   specialization       block-structured family vs its degenerations
///   negative-control     a sign-flipped identity must fail

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <string>
#include <vector>

#include "mzv/suite.hpp"

namespace {

const std::vector<mzv::SuiteCheck>& all_rows() {
  static const std::vector<mzv::SuiteCheck> rows = mzv::run_suite();
  return rows;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

/// Assert every row in the group passes and the group has the pinned size.
void require_group(const std::string& prefix, std::size_t expected_count) {
  std::size_t n = 0;
  for (const auto& row : all_rows()) {
    if (!starts_with(row.name, prefix)) continue;
    ++n;
    CAPTURE(row.name);
    CAPTURE(row.residual);
    CAPTURE(row.bound);
    CAPTURE(row.tolerance);
    CAPTURE(row.detail);
    CHECK(row.pass);
  }
  CHECK(n == expected_count);
}

}  // namespace

TEST_CASE("acceptance: constants") { require_group("constants.", 2); }

TEST_CASE("acceptance: li-tail") { require_group("li-tail.", 27); }

TEST_CASE("acceptance: fterm") { require_group("fterm.", 15); }

TEST_CASE("acceptance: ito-special") { require_group("ito-special.", 27); }

TEST_CASE("acceptance: ito-functional") { require_group("ito-functional.", 4); }

TEST_CASE("acceptance: genito-special") { require_group("genito-special.", 9); }

TEST_CASE("acceptance: miyagawa-functional") {
  require_group("miyagawa-functional.", 6);
}

TEST_CASE("acceptance: ito-general") { require_group("ito-general.", 12); }

TEST_CASE("acceptance: genito-general") { require_group("genito-general.", 1); }

TEST_CASE("acceptance: duality") { require_group("duality.", 32); }

TEST_CASE("acceptance: shuffle") { require_group("shuffle.", 4); }

TEST_CASE("acceptance: specialization") { require_group("specialization.", 10); }

TEST_CASE("acceptance: negative-control") {
  require_group("negative-control", 1);
}

TEST_CASE("acceptance: census and determinism") {
  const auto& rows = all_rows();
  CHECK(rows.size() == 150);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i - 1].name < rows[i].name);  // sorted, no duplicate names

  // CSV surface: header + one line per check
  const std::string csv = mzv::suite_csv(rows);
  CHECK(csv.rfind("check,lhs,residual,bound,pass,millis\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == rows.size() + 1);
}
