/// @file test_linforms.cpp
/// @brief Generic linear-forms zeta: closed-form pins, cross-engine
///        agreement with the specialized families (independent summation
///        routes), and refusal of uncertifiable inputs.

#include <doctest.h>

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "oracles.hpp"

using Matrix = std::vector<std::vector<double>>;

TEST_CASE("linforms: single variable reduces to the Riemann zeta") {
  {
    const auto r = mzv::eval_linear_forms_zeta(Matrix{{1.0}}, {2.0});
    CHECK(std::fabs(r.value - oracle::kZeta2) <= r.err + 1e-10);
  }
  {
    const auto r = mzv::eval_linear_forms_zeta(Matrix{{1.0}}, {2.5});
    CHECK(std::fabs(r.value - oracle::zeta_em_ref(2.5)) <= r.err + 1e-9);
  }
}

TEST_CASE("linforms: cross-engine checks against the zeta families") {
  {
    // rows m, n, m+n with exponents 1,1,1: equals 2 zeta(3)
    const Matrix A{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const auto r = mzv::eval_linear_forms_zeta(A, {1.0, 1.0, 1.0});
    CHECK(std::fabs(r.value - oracle::kMT_1_1_1) <= r.err + 1e-8);
  }
  {
    // rows m, m+n with exponents 1,2: the nested double zeta = zeta(3)
    const Matrix A{{1.0, 0.0}, {1.0, 1.0}};
    const auto r = mzv::eval_linear_forms_zeta(A, {1.0, 2.0});
    const auto ez = mzv::eval_zeta_ez(mzv::Index{1, 2});
    CHECK(std::fabs(r.value - ez.value) <= r.err + ez.err + 1e-9);
  }
  {
    // independent-heads family via its defining linear forms
    const Matrix A{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const auto r = mzv::eval_linear_forms_zeta(A, {2.0, 3.0, 2.0});
    const auto mt = mzv::eval_zeta_mt(mzv::Index{2, 3}, 2.0);
    CHECK(std::fabs(r.value - mt.value) <= r.err + mt.err + 1e-10);
  }
  {
    const Matrix A{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const auto r = mzv::eval_linear_forms_zeta(A, {1.0, 1.0, 2.0});
    const auto mt = mzv::eval_zeta_mt(mzv::Index{1, 1}, 2.0);
    CHECK(std::fabs(r.value - mt.value) <= r.err + mt.err + 1e-8);
  }
}

TEST_CASE("linforms: refusals") {
  // zero row
  CHECK_THROWS_AS(mzv::eval_linear_forms_zeta(Matrix{{0.0, 0.0}}, {2.0}),
                  mzv::Error);
  // negative coefficient
  CHECK_THROWS_AS(mzv::eval_linear_forms_zeta(Matrix{{1.0, -1.0}}, {2.0}),
                  mzv::Error);
  // divergent: harmonic series
  CHECK_THROWS_AS(mzv::eval_linear_forms_zeta(Matrix{{1.0}}, {1.0}),
                  mzv::Error);
  // divergent: product of two harmonic series
  CHECK_THROWS_AS(
      mzv::eval_linear_forms_zeta(Matrix{{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0}),
      mzv::Error);
  // shape mismatch between rows and exponents
  CHECK_THROWS_AS(mzv::eval_linear_forms_zeta(Matrix{{1.0}}, {2.0, 2.0}),
                  mzv::Error);
}
