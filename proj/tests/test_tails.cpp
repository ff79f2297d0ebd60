/// @file test_tails.cpp
/// @brief Certified tail enclosures: closed-form integrals, tail sums
///        checked against brute-force partial sums, and the Riemann zeta
///        values built on them.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/tails.hpp"
#include "oracles.hpp"

namespace {

/// Brute partial sum of ln^p(m) m^{-sigma} over N < m <= M in long double.
long double brute_tail(int p, double sigma, long N, long M) {
  long double s = 0.0L;
  for (long m = M; m > N; --m) {  // ascending magnitude for accuracy
    const long double lm = std::log(static_cast<long double>(m));
    long double t = std::pow(static_cast<long double>(m),
                             static_cast<long double>(-sigma));
    for (int i = 0; i < p; ++i) t *= lm;
    s += t;
  }
  return s;
}

}  // namespace

TEST_CASE("tails: closed-form integral, base cases and recurrence") {
  // p = 0: X^{1-sigma} / (sigma-1)
  CHECK(mzv::log_pow_integral(0, 2.0, 10.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(mzv::log_pow_integral(0, 3.0, 4.0) ==
        doctest::Approx(1.0 / 32.0).epsilon(1e-14));
  // p = 1: X^{1-sigma} (ln X / (sigma-1) + 1/(sigma-1)^2)
  CHECK(mzv::log_pow_integral(1, 2.0, 5.0) ==
        doctest::Approx((std::log(5.0) + 1.0) / 5.0).epsilon(1e-14));
  // integration by parts: I(p) = ln^p(X) X^{1-sigma}/(sigma-1) + p/(sigma-1) I(p-1)
  for (int p = 1; p <= 4; ++p) {
    for (double sigma : {1.5, 2.0, 3.25}) {
      for (double X : {2.0, 7.5, 40.0}) {
        const double lhs = mzv::log_pow_integral(p, sigma, X);
        const double rhs = std::pow(std::log(X), p) * std::pow(X, 1.0 - sigma) /
                               (sigma - 1.0) +
                           p / (sigma - 1.0) * mzv::log_pow_integral(p - 1, sigma, X);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("tails: zeta_tail encloses the true remainder") {
  // true remainder of zeta(2) past N = 100
  long double partial = 0.0L;
  for (long m = 100; m >= 1; --m) partial += 1.0L / (static_cast<long double>(m) * m);
  const double truth = static_cast<double>(oracle::kZeta2 - partial);
  const auto t = mzv::zeta_tail(2.0, 100.0);
  CHECK(std::fabs(t.value - truth) <= t.err);
  CHECK(t.err > 0.0);
  CHECK(t.err < 1e-4);  // order-1 enclosure is ~ f(N)/2 wide or better

  // higher order must still enclose
  const auto t2 = mzv::zeta_tail(2.0, 100.0, 2);
  CHECK(std::fabs(t2.value - truth) <= t2.err);
  // and the two enclosures overlap
  CHECK(std::fabs(t.value - t2.value) <= t.err + t2.err);
}

TEST_CASE("tails: log_pow_tail encloses a brute-forced remainder") {
  // sum_{m>100} ln(m)/m^3: brute to 2e6 leaves < 2e-12 unaccounted
  const double truth = static_cast<double>(brute_tail(1, 3.0, 100, 2000000));
  for (int order : {0, 1, 2}) {
    const auto t = mzv::log_pow_tail(1, 3.0, 100.0, order);
    CAPTURE(order);
    CHECK(std::fabs(t.value - truth) <= t.err + 2e-12);
    CHECK(t.err >= 0.0);
  }
  // p = 2 with a small N: thresholds force exact leading-term peeling
  const double truth2 = static_cast<double>(brute_tail(2, 4.0, 5, 3000000));
  const auto t2 = mzv::log_pow_tail(2, 4.0, 5.0);
  CHECK(std::fabs(t2.value - truth2) <= t2.err + 1e-12);
}

TEST_CASE("tails: riemann zeta against frozen constants and a reference sum") {
  struct Pin { double s, want; };
  const Pin pins[] = {{2.0, oracle::kZeta2}, {3.0, oracle::kZeta3},
                      {4.0, oracle::kZeta4}, {5.0, oracle::kZeta5},
                      {7.0, oracle::kZeta7}, {10.0, oracle::kZeta10}};
  for (const auto& p : pins) {
    const auto z = mzv::riemann_zeta(p.s);
    CAPTURE(p.s);
    CHECK(std::fabs(z.value - p.want) <= z.err + 1e-14);
    CHECK(z.err < 1e-10);
  }
  // non-integer argument vs an Euler-Maclaurin reference sum
  const auto z15 = mzv::riemann_zeta(1.5);
  CHECK(std::fabs(z15.value - oracle::zeta_em_ref(1.5)) <= z15.err + 1e-10);
  const auto z27 = mzv::riemann_zeta(2.75);
  CHECK(std::fabs(z27.value - oracle::zeta_em_ref(2.75)) <= z27.err + 1e-12);
}

TEST_CASE("tails: domain refusals") {
  CHECK_THROWS_AS(mzv::zeta_tail(1.0, 10.0), mzv::Error);
  CHECK_THROWS_AS(mzv::zeta_tail(0.5, 10.0), mzv::Error);
  CHECK_THROWS_AS(mzv::log_pow_tail(1, 1.0, 10.0), mzv::Error);
  CHECK_THROWS_AS(mzv::riemann_zeta(1.0), mzv::Error);
  CHECK_THROWS_AS(mzv::riemann_zeta(0.99), mzv::Error);
}
