/// @file test_series_ez.cpp
/// @brief Lexicographic-nesting zeta: frozen low-weight constants,
///        brute-force cross-checks, the zero-entry fallback path, and
///        divergence refusals.

#include <doctest.h>

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "oracles.hpp"

using mzv::Index;

namespace {

void check_pin(const Index& k, double want, double slack = 1e-12) {
  const auto r = mzv::eval_zeta_ez(k);
  CAPTURE(mzv::format_index(k));
  CHECK(!r.truncated);
  CHECK(r.err <= 1e-8);
  CHECK(std::fabs(r.value - want) <= r.err + slack);
}

}  // namespace

TEST_CASE("ez: frozen constants at low weight") {
  check_pin(Index{2}, oracle::kZeta2);
  check_pin(Index{3}, oracle::kZeta3);
  check_pin(Index{1, 2}, oracle::kZeta_1_2);      // = zeta(3)
  check_pin(Index{2, 2}, oracle::kZeta_2_2);      // = pi^4/120
  check_pin(Index{1, 3}, oracle::kZeta_1_3);      // = zeta(4)/4
  check_pin(Index{1, 1, 2}, oracle::kZeta_1_1_2); // = zeta(4)
  check_pin(Index{2, 2, 2}, oracle::kZeta_2_2_2);
  check_pin(Index{10}, oracle::kZeta10);
}

TEST_CASE("ez: brute-force cross-checks") {
  {
    // truncation of the brute sum dominates: tail ~ zeta(2)/(2 N^2)
    const long N = 100000;
    const auto r = mzv::eval_zeta_ez(Index{2, 3});
    const double brute = oracle::ez_brute(Index{2, 3}, N);
    CHECK(std::fabs(r.value - brute) <= r.err + 1e-9);
  }
  {
    // depth 3 with a leading 1: brute tail ~ (ln N)^2 / N
    const long N = 200000;
    const auto r = mzv::eval_zeta_ez(Index{1, 2, 2});
    const double brute = oracle::ez_brute(Index{1, 2, 2}, N);
    CHECK(std::fabs(r.value - brute) <= r.err + 2e-3);
  }
}

TEST_CASE("ez: zero-entry fallback") {
  // sum_{m1<m2} m2^{-3} = zeta(2) - zeta(3)
  const auto r = mzv::eval_zeta_ez(Index{0, 3});
  CHECK(std::fabs(r.value - (oracle::kZeta2 - oracle::kZeta3)) <= r.err + 1e-9);
  CHECK(!r.truncated);

  // sum_{m1<m2<m3} m2^{-1} m3^{-3}: brute reference
  const auto r2 = mzv::eval_zeta_ez(Index{0, 1, 3});
  const double brute = oracle::ez_brute(Index{0, 1, 3}, 100000);
  CHECK(std::fabs(r2.value - brute) <= r2.err + 1e-4);
}

TEST_CASE("ez: divergence refusals") {
  CHECK_THROWS_AS(mzv::eval_zeta_ez(Index{1}), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_zeta_ez(Index{2, 1}), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_zeta_ez(Index{0, 2}), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_zeta_ez(Index{1, 1}), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_zeta_ez(Index{}), mzv::Error);
}

TEST_CASE("ez: config variations agree within combined bounds") {
  mzv::EvalConfig tight;
  tight.cutoff = 16;
  const auto a = mzv::eval_zeta_ez(Index{1, 2}, tight);
  const auto b = mzv::eval_zeta_ez(Index{1, 2});
  CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-15);
}
