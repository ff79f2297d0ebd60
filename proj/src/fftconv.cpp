/// @file fftconv.cpp
/// @brief Direct and FFT convolution with certified-ish noise envelopes.

#include "mzv/fftconv.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "mzv/errors.hpp"
#include "mzv/kernels.hpp"

namespace mzv {
namespace {

constexpr double kEps = 2.220446049250313e-16;

// FFTW planning is not thread-safe; execution of independent plans is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

double l2norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> conv_direct(const std::vector<double>& a,
                                const std::vector<double>& b,
                                double* noise_abs) {
  if (a.empty() || b.empty()) {
    if (noise_abs) *noise_abs = 0.0;
    return {};
  }
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  kernels::ops().conv(a.data(), a.size(), b.data(), b.size(), out.data());
  if (noise_abs) {
    // each output entry is a dot product of at most min(na, nb) terms;
    // with nonnegative inputs the roundoff is <= eps * terms * entry,
    // bounded uniformly by the largest |entry|
    double mx = 0.0;
    for (double x : out) mx = std::max(mx, std::fabs(x));
    *noise_abs = kEps * double(std::min(a.size(), b.size()) + 1) * mx;
  }
  return out;
}

std::vector<double> conv_fft(const std::vector<double>& a,
                             const std::vector<double>& b,
                             double* noise_abs) {
  if (a.empty() || b.empty()) {
    if (noise_abs) *noise_abs = 0.0;
    return {};
  }
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  double* ra = fftw_alloc_real(n);
  double* rb = fftw_alloc_real(n);
  fftw_complex* ca = fftw_alloc_complex(n / 2 + 1);
  fftw_complex* cb = fftw_alloc_complex(n / 2 + 1);
  if (!ra || !rb || !ca || !cb) fail(Errc::internal, "fftw_alloc failed");

  std::fill(ra, ra + n, 0.0);
  std::fill(rb, rb + n, 0.0);
  std::copy(a.begin(), a.end(), ra);
  std::copy(b.begin(), b.end(), rb);

  fftw_plan pa, pb, pinv;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    pa = fftw_plan_dft_r2c_1d(int(n), ra, ca, FFTW_ESTIMATE);
    pb = fftw_plan_dft_r2c_1d(int(n), rb, cb, FFTW_ESTIMATE);
    pinv = fftw_plan_dft_c2r_1d(int(n), ca, ra, FFTW_ESTIMATE);
  }
  fftw_execute(pa);
  fftw_execute(pb);
  for (std::size_t i = 0; i < n / 2 + 1; ++i) {
    const double re = ca[i][0] * cb[i][0] - ca[i][1] * cb[i][1];
    const double im = ca[i][0] * cb[i][1] + ca[i][1] * cb[i][0];
    ca[i][0] = re;
    ca[i][1] = im;
  }
  fftw_execute(pinv);

  std::vector<double> out(out_len);
  const double scale = 1.0 / double(n);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = ra[i] * scale;

  if (noise_abs) {
    // classical FFT-convolution envelope ||err||_inf <= c eps log2(n) |a|_2 |b|_2
    const double lg = std::log2(double(n));
    *noise_abs = 8.0 * kEps * lg * l2norm(a) * l2norm(b);
  }

  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(pa);
    fftw_destroy_plan(pb);
    fftw_destroy_plan(pinv);
  }
  fftw_free(ra);
  fftw_free(rb);
  fftw_free(ca);
  fftw_free(cb);
  return out;
}

std::vector<double> conv_full(const std::vector<double>& a,
                              const std::vector<double>& b,
                              double* noise_abs) {
  const double work = double(a.size()) * double(b.size());
  if (work <= 4.0e6) return conv_direct(a, b, noise_abs);
  return conv_fft(a, b, noise_abs);
}

}  // namespace mzv
