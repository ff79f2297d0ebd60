/// @file test_deep.cpp
/// @brief The exponential-argument polylog engine: agreement with the
///        power-series engine across the crossover, and validity of its
///        decay envelopes.

#include <doctest.h>

#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/xi.hpp"
#include "polylog_deep.hpp"

using mzv::Index;
using mzv::PolylogRoute;
using mzv::XiFamily;
using mzv::XiSpec;

namespace {

XiSpec spec_of(XiFamily fam, Index k, int kn1 = 0) {
  XiSpec s;
  s.family = fam;
  s.k = std::move(k);
  s.kn1 = kn1;
  return s;
}

}  // namespace

TEST_CASE("deep: both polylog routes agree where they overlap") {
  const XiSpec specs[] = {
      spec_of(XiFamily::AK, Index{2}),
      spec_of(XiFamily::AK, Index{1, 2}),
      spec_of(XiFamily::AK, Index{1, 1, 3}),
      spec_of(XiFamily::ITO, Index{2}),
      spec_of(XiFamily::ITO, Index{2, 3}),
      spec_of(XiFamily::ITO, Index{1, 1}),
      spec_of(XiFamily::GEN_ITO, Index{2}, 1),
      spec_of(XiFamily::GEN_ITO, Index{1, 2}, 2),
  };
  for (const auto& sp : specs) {
    // the series route caps z = 1-e^{-t} at 0.999, i.e. t <~ 6.9
    for (double t : {3.0, 3.5, 4.0, 5.0, 6.0, 6.5}) {
      const auto a = mzv::xi_polylog_factor(sp, t, PolylogRoute::SERIES);
      const auto b = mzv::xi_polylog_factor(sp, t, PolylogRoute::DEEP);
      CAPTURE(static_cast<int>(sp.family));
      CAPTURE(t);
      CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-13);
    }
  }
}

TEST_CASE("deep: AUTO route is continuous across the crossover") {
  const auto sp = spec_of(XiFamily::AK, Index{1, 2});
  const auto lo = mzv::xi_polylog_factor(sp, 2.999999, PolylogRoute::AUTO);
  const auto hi = mzv::xi_polylog_factor(sp, 3.000001, PolylogRoute::AUTO);
  CHECK(std::fabs(lo.value - hi.value) <= lo.err + hi.err + 1e-5);
}

TEST_CASE("deep: DEEP route refuses t below its domain") {
  const auto sp = spec_of(XiFamily::AK, Index{2});
  CHECK_THROWS_AS(mzv::xi_polylog_factor(sp, 2.0, PolylogRoute::DEEP),
                  mzv::Error);
}

TEST_CASE("deep: decay envelope bounds the factor it models") {
  const mzv::EvalConfig cfg;
  // nested factor for (1,2); product factor for (2,3); tailed factor
  const auto fn = mzv::deep::build_nested(Index{1, 2}, cfg);
  const auto fp = mzv::deep::build_product(Index{2, 3}, cfg);
  const auto fw = mzv::deep::build_with_tail(Index{2}, 1, cfg);
  for (const auto* f : {&fn, &fp, &fw}) {
    const double T = 4.0;
    const double cb = mzv::deep::bound_coeff(*f, T);
    const int pd = mzv::deep::poly_degree(*f);
    CHECK(cb > 0.0);
    CHECK(pd >= 0);
    for (double t : {4.0, 5.0, 7.0, 10.0, 20.0, 40.0}) {
      const auto v = mzv::deep::eval(*f, t);
      CHECK(std::fabs(v.value) - v.err <=
            cb * std::pow(1.0 + t, pd) + 1e-12);
    }
  }
}

TEST_CASE("deep: known limit at large t") {
  // Li_k(1 - e^{-t}) -> zeta(k) as t -> inf; at t = 30 the gap is ~ t e^{-t}
  const auto sp = spec_of(XiFamily::AK, Index{3});
  const auto v = mzv::xi_polylog_factor(sp, 30.0, PolylogRoute::DEEP);
  CHECK(std::fabs(v.value - 1.2020569031595942854) <= v.err + 1e-11);
}
