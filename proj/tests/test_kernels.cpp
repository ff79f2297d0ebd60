/// @file test_kernels.cpp
/// @brief Kernel equivalence contract: SIMD variants must match the scalar
///        reference bit-for-bit on pow_fill (integer exponents), axpy and
///        conv, and within a small tolerance on the compensated reductions.

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mzv/kernels.hpp"

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng) * std::exp2(static_cast<int>(rng() % 20) - 10);
  return v;
}

long double sum_ld(const std::vector<double>& a) {
  long double s = 0.0L;
  for (double x : a) s += x;
  return s;
}

long double dot_ld(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<long double>(a[i]) * b[i];
  return s;
}

/// All compiled-in variants usable on this CPU (scalar always first).
std::vector<const mzv::kernels::Ops*> variants() {
  std::vector<const mzv::kernels::Ops*> v{&mzv::kernels::scalar_ops()};
  if (const auto* p = mzv::kernels::avx2_ops_or_null()) v.push_back(p);
  if (const auto* p = mzv::kernels::neon_ops_or_null()) v.push_back(p);
  return v;
}

}  // namespace

TEST_CASE("kernels: dispatcher exposes a usable active set") {
  const auto& active = mzv::kernels::ops();
  CHECK(active.name != nullptr);
  CHECK(active.sum != nullptr);
  CHECK(active.dot != nullptr);
  CHECK(active.axpy != nullptr);
  CHECK(active.conv != nullptr);
  CHECK(active.pow_fill != nullptr);

  CHECK(mzv::kernels::ops_by_name("scalar") == &mzv::kernels::scalar_ops());
  CHECK(mzv::kernels::ops_by_name("avx2") == mzv::kernels::avx2_ops_or_null());
  CHECK(mzv::kernels::ops_by_name("neon") == mzv::kernels::neon_ops_or_null());
  if (!mzv::kernels::avx2_available())
    CHECK(mzv::kernels::avx2_ops_or_null() == nullptr);
  if (!mzv::kernels::neon_available())
    CHECK(mzv::kernels::neon_ops_or_null() == nullptr);
}

TEST_CASE("kernels: pow_fill integer exponents are bit-for-bit across variants") {
  const auto& ref = mzv::kernels::scalar_ops();
  for (const auto* ops : variants()) {
    CAPTURE(ops->name);
    for (double s : {1.0, 2.0, 3.0, 17.0, 64.0}) {
      for (double first : {1.0, 7.0, 1000.0}) {
        const std::size_t n = 257;  // odd length exercises the SIMD remainder
        std::vector<double> a(n, -1.0), b(n, -1.0);
        ref.pow_fill(a.data(), first, n, s);
        ops->pow_fill(b.data(), first, n, s);
        std::size_t mismatch = n;
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) { mismatch = i; break; }
        CAPTURE(s);
        CAPTURE(first);
        CHECK(mismatch == n);
        // spot-check the values themselves
        CHECK(a[0] == doctest::Approx(std::pow(first, -s)).epsilon(1e-14));
        CHECK(a[n - 1] ==
              doctest::Approx(std::pow(first + double(n - 1), -s)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("kernels: pow_fill non-integer exponent stays close to std::pow") {
  for (const auto* ops : variants()) {
    CAPTURE(ops->name);
    const std::size_t n = 100;
    std::vector<double> a(n);
    ops->pow_fill(a.data(), 3.0, n, 2.5);
    for (std::size_t i = 0; i < n; i += 17)
      CHECK(a[i] ==
            doctest::Approx(std::pow(3.0 + double(i), -2.5)).epsilon(1e-13));
  }
}

TEST_CASE("kernels: axpy matches scalar bit-for-bit") {
  const auto& ref = mzv::kernels::scalar_ops();
  const auto x = random_vec(1003, 42);
  const auto base = random_vec(1003, 43);
  for (const auto* ops : variants()) {
    CAPTURE(ops->name);
    std::vector<double> ya = base, yb = base;
    ref.axpy(ya.data(), x.data(), 0.37, x.size());
    ops->axpy(yb.data(), x.data(), 0.37, x.size());
    std::size_t mismatch = ya.size();
    for (std::size_t i = 0; i < ya.size(); ++i)
      if (ya[i] != yb[i]) { mismatch = i; break; }
    CHECK(mismatch == ya.size());
  }
  // semantic spot check: out[i] += a[i]*c
  std::vector<double> y{1.0, 2.0};
  const double a2[2] = {10.0, 20.0};
  ref.axpy(y.data(), a2, 0.5, 2);
  CHECK(y[0] == 6.0);
  CHECK(y[1] == 12.0);
}

TEST_CASE("kernels: conv matches scalar bit-for-bit and accumulates") {
  const auto& ref = mzv::kernels::scalar_ops();
  const auto a = random_vec(37, 7);
  const auto b = random_vec(53, 8);
  const auto seed = random_vec(37 + 53 - 1, 9);  // out is NOT cleared by conv
  for (const auto* ops : variants()) {
    CAPTURE(ops->name);
    std::vector<double> oa = seed, ob = seed;
    ref.conv(a.data(), a.size(), b.data(), b.size(), oa.data());
    ops->conv(a.data(), a.size(), b.data(), b.size(), ob.data());
    std::size_t mismatch = oa.size();
    for (std::size_t i = 0; i < oa.size(); ++i)
      if (oa[i] != ob[i]) { mismatch = i; break; }
    CHECK(mismatch == oa.size());
  }
  // semantic spot check: [1,2] (*) [3,4] = [3,10,8] on a zero seed
  std::vector<double> out(3, 0.0);
  const double pa[2] = {1.0, 2.0};
  const double pb[2] = {3.0, 4.0};
  ref.conv(pa, 2, pb, 2, out.data());
  CHECK(out[0] == 3.0);
  CHECK(out[1] == 10.0);
  CHECK(out[2] == 8.0);
}

TEST_CASE("kernels: compensated reductions beat naive summation") {
  const auto& ref = mzv::kernels::scalar_ops();
  // Neumaier must survive catastrophic cancellation exactly.
  const std::vector<double> hard{1e16, 1.0, -1e16};
  CHECK(ref.sum(hard.data(), hard.size()) == 1.0);
  const std::vector<double> ha{1e8, 1.0, 1e8};
  const std::vector<double> hb{1e8, 1.0, -1e8};
  CHECK(ref.dot(ha.data(), hb.data(), 3) == 1.0);

  const auto a = random_vec(4099, 101);
  const auto b = random_vec(4099, 102);
  const double sref = static_cast<double>(sum_ld(a));
  const double dref = static_cast<double>(dot_ld(a, b));
  for (const auto* ops : variants()) {
    CAPTURE(ops->name);
    CHECK(ops->sum(a.data(), a.size()) == doctest::Approx(sref).epsilon(1e-13));
    CHECK(ops->dot(a.data(), b.data(), a.size()) ==
          doctest::Approx(dref).epsilon(1e-13));
  }
}
