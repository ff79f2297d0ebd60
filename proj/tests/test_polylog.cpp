/// @file test_polylog.cpp
/// @brief Polylogarithm evaluators on [0,1): closed forms, brute-force
///        series cross-checks (pinning the nesting orientation), the three
///        kinds, and domain/budget refusals.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/series.hpp"
#include "oracles.hpp"

using mzv::Index;
using mzv::PolylogKind;

namespace {

/// Nested brute force: sum over m_1<...<m_n of z^{m_n} / prod m_i^{k_i},
/// via the prefix recursion w_j(m) = m^{-k_j} sum_{m'<m} w_{j-1}(m')
/// with w_1(m) = m^{-k_1}, then sum_m w_n(m) z^m, in long double.
long double nested_brute(const Index& k, double z, int M) {
  std::vector<long double> w(static_cast<size_t>(M) + 1, 0.0L);
  for (size_t j = 0; j < k.size(); ++j) {
    std::vector<long double> nw(w.size(), 0.0L);
    long double run = 0.0L;
    for (int m = 1; m <= M; ++m) {
      const long double pw = std::pow(static_cast<long double>(m), -k[j]);
      nw[static_cast<size_t>(m)] = (j == 0) ? pw : run * pw;
      run += w[static_cast<size_t>(m)];
    }
    w = nw;
  }
  long double s = 0.0L, zp = 1.0L;
  for (int m = 1; m <= M; ++m) {
    zp *= z;
    s += w[static_cast<size_t>(m)] * zp;
  }
  return s;
}

}  // namespace

TEST_CASE("polylog: single-index closed forms") {
  {
    const auto r = mzv::eval_polylog_multi(Index{1}, 0.5);
    CHECK(std::fabs(r.value - std::log(2.0)) <= r.err + 1e-13);
  }
  {
    const auto r = mzv::eval_polylog_multi(Index{1}, std::exp(-1.0));
    CHECK(std::fabs(r.value - oracle::kLi1ExpM1) <= r.err + 1e-13);
  }
  {
    const auto r = mzv::eval_polylog_multi(Index{2}, 0.5);
    CHECK(std::fabs(r.value - oracle::kLi2Half) <= r.err + 1e-13);
  }
}

TEST_CASE("polylog: nesting orientation against the defining series") {
  // Li_{(1,2)}(z) = sum_n z^n H_{n-1} / n^2  (inner variable carries the 1)
  {
    const double z = 0.3;
    long double brute = 0.0L, H = 0.0L, zp = 1.0L;
    for (int n = 1; n <= 200; ++n) {
      zp *= z;
      brute += zp * H / (static_cast<long double>(n) * n);
      H += 1.0L / n;
    }
    const auto r = mzv::eval_polylog_multi(Index{1, 2}, z);
    CHECK(std::fabs(r.value - static_cast<double>(brute)) <= r.err + 1e-13);
    // and it differs decisively from the transposed word at this z
    const auto t = mzv::eval_polylog_multi(Index{2, 1}, z);
    CHECK(std::fabs(t.value - r.value) > 1e-3);
  }
  {
    const double z = 0.5;
    const auto r = mzv::eval_polylog_multi(Index{2, 3}, z);
    const double brute = static_cast<double>(nested_brute(Index{2, 3}, z, 400));
    CHECK(std::fabs(r.value - brute) <= r.err + 1e-13);
  }
  {
    const double z = 0.6;
    const auto r = mzv::eval_polylog_multi(Index{1, 1, 2}, z);
    const double brute =
        static_cast<double>(nested_brute(Index{1, 1, 2}, z, 400));
    CHECK(std::fabs(r.value - brute) <= r.err + 1e-13);
  }
}

TEST_CASE("polylog: independent-heads kind") {
  {
    // single head (1) with tail 1: sum_m z^m m^{-2} = Li_2(z)
    const double z = 0.6;
    const auto a = mzv::eval_polylog(PolylogKind::WITH_TAIL, Index{1}, z, 1);
    const auto b = mzv::eval_polylog_multi(Index{2}, z);
    CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-14);
  }
  {
    // zero tail: plain product of single polylogarithms
    const double z = 0.4;
    const auto a = mzv::eval_polylog(PolylogKind::WITH_TAIL, Index{1, 2}, z, 0);
    const auto l1 = mzv::eval_polylog_multi(Index{1}, z);
    const auto l2 = mzv::eval_polylog_multi(Index{2}, z);
    const auto prod = l1 * l2;
    CHECK(std::fabs(a.value - prod.value) <= a.err + prod.err + 1e-14);
  }
  {
    // sum_{m,n} z^{m+n}/(m n (m+n)) grouped over totals
    const double z = 0.5;
    long double brute = 0.0L;
    for (int T = 2; T <= 400; ++T) {
      long double conv = 0.0L;
      for (int a = 1; a < T; ++a)
        conv += 1.0L / (static_cast<long double>(a) * (T - a));
      brute += std::pow(static_cast<long double>(z), T) * conv / T;
    }
    const auto r = mzv::eval_polylog(PolylogKind::WITH_TAIL, Index{1, 1}, z, 1);
    CHECK(std::fabs(r.value - static_cast<double>(brute)) <= r.err + 1e-13);
  }
}

TEST_CASE("polylog: block-structured kind") {
  {
    // leading (1), final (2) at the block maximum: sum z^m m^{-3}
    const double z = 0.5;
    const auto a = mzv::eval_polylog(PolylogKind::GMT_LI, Index{}, z, 0,
                                     {Index{1}, Index{2}});
    const auto b = mzv::eval_polylog_multi(Index{3}, z);
    CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-13);
  }
  {
    // leading (1), final (1,2): sum_m z^m m^{-2} (zeta(2) - H^{(2)}_m)
    const double z = 0.5;
    long double brute = 0.0L, H2 = 0.0L, zp = 1.0L;
    for (int m = 1; m <= 400; ++m) {
      H2 += 1.0L / (static_cast<long double>(m) * m);
      zp *= z;
      brute += zp / (static_cast<long double>(m) * m) *
               (static_cast<long double>(oracle::kZeta2) - H2);
    }
    const auto r = mzv::eval_polylog(PolylogKind::GMT_LI, Index{}, z, 0,
                                     {Index{1}, Index{1, 2}});
    CHECK(std::fabs(r.value - static_cast<double>(brute)) <= r.err + 1e-12);
  }
}

TEST_CASE("polylog: domain and budget refusals") {
  CHECK_THROWS_AS(mzv::eval_polylog_multi(Index{2}, -0.1), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_polylog_multi(Index{2}, 1.0), mzv::Error);
  // close to 1 the series engine refuses rather than degrade
  CHECK_THROWS_AS(mzv::eval_polylog_multi(Index{2}, 0.9995), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_polylog_multi(Index{}, 0.5), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_polylog_multi(Index{0, 2}, 0.5), mzv::Error);
  CHECK_THROWS_AS(mzv::eval_polylog(PolylogKind::WITH_TAIL, Index{}, 0.5, 1),
                  mzv::Error);
  CHECK_THROWS_AS(mzv::eval_polylog(PolylogKind::WITH_TAIL, Index{1}, 0.5, -1),
                  mzv::Error);

  // a starved budget yields an honest truncated enclosure, never a lie:
  // the certified band must still cover Li_1(z) = -ln(1-z)
  mzv::EvalConfig tiny;
  tiny.budget = 200;
  tiny.use_cache = false;
  const double z = 0.9985;
  const auto starved = mzv::eval_polylog_multi(Index{1}, z, tiny);
  CHECK(starved.truncated);
  CHECK(std::fabs(starved.value + std::log1p(-z)) <= starved.err);
}

TEST_CASE("polylog: value at z=0 is zero") {
  const auto r = mzv::eval_polylog_multi(Index{2}, 0.0);
  CHECK(std::fabs(r.value) <= r.err + 1e-16);
}
