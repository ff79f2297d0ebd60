/// @file test_fftconv.cpp
/// @brief Additive-convolution helper: direct and FFT paths agree with a
///        long-double reference within the claimed per-entry noise bound.

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "mzv/fftconv.hpp"

namespace {

std::vector<double> random_decaying(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng) / double(i + 1);
  return v;
}

std::vector<long double> conv_ref(const std::vector<double>& a,
                                  const std::vector<double>& b) {
  std::vector<long double> out(a.size() + b.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += static_cast<long double>(a[i]) * b[j];
  return out;
}

void check_against_ref(const std::vector<double>& got,
                       const std::vector<long double>& ref, double noise) {
  REQUIRE(got.size() == ref.size());
  CHECK(std::isfinite(noise));
  CHECK(noise >= 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    worst = std::max(worst, std::fabs(got[i] - static_cast<double>(ref[i])));
  CAPTURE(worst);
  CAPTURE(noise);
  CHECK(worst <= noise + 1e-18);
}

}  // namespace

TEST_CASE("fftconv: tiny integer example on all paths") {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{3.0, 4.0};
  const std::vector<double> want{3.0, 10.0, 8.0};
  double noise = -1.0;
  for (auto* fn : {&mzv::conv_full, &mzv::conv_direct, &mzv::conv_fft}) {
    const auto got = fn(a, b, &noise);
    REQUIRE(got.size() == 3);
    CHECK(noise >= 0.0);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::fabs(got[i] - want[i]) <= noise + 1e-18);
  }
  // the direct path on exact small integers is exact
  const auto got = mzv::conv_direct(a, b, &noise);
  CHECK(got[0] == 3.0);
  CHECK(got[1] == 10.0);
  CHECK(got[2] == 8.0);
}

TEST_CASE("fftconv: direct and FFT paths honor their noise bounds") {
  const auto a = random_decaying(300, 11);
  const auto b = random_decaying(201, 12);
  const auto ref = conv_ref(a, b);

  double nd = -1.0, nf = -1.0;
  const auto d = mzv::conv_direct(a, b, &nd);
  const auto f = mzv::conv_fft(a, b, &nf);
  check_against_ref(d, ref, nd);
  check_against_ref(f, ref, nf);

  // the two paths agree within combined noise
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    worst = std::max(worst, std::fabs(d[i] - f[i]));
  CHECK(worst <= nd + nf + 1e-18);
}

TEST_CASE("fftconv: conv_full stays certified at sizes that trigger the FFT") {
  const auto a = random_decaying(1500, 21);
  const auto b = random_decaying(700, 22);
  const auto ref = conv_ref(a, b);
  double noise = -1.0;
  const auto got = mzv::conv_full(a, b, &noise);
  check_against_ref(got, ref, noise);
}

TEST_CASE("fftconv: single-entry operands degenerate to scaling") {
  const std::vector<double> a{0.5};
  const auto b = random_decaying(64, 31);
  double noise = -1.0;
  const auto got = mzv::conv_full(a, b, &noise);
  REQUIRE(got.size() == 64);
  for (std::size_t i = 0; i < 64; ++i)
    CHECK(std::fabs(got[i] - 0.5 * b[i]) <= noise + 1e-18);
}
