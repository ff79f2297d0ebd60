/// @file kernels_neon.cpp
/// @brief NEON kernel variants (aarch64).  Same dispatch contract as the
///        AVX2 set; compiled to an empty translation unit elsewhere.

#include "mzv/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace mzv::kernels {
namespace {

inline void scalar_neumaier(double& s, double& c, double x) {
  const double t = s + x;
  if (std::fabs(s) >= std::fabs(x))
    c += (s - t) + x;
  else
    c += (x - t) + s;
  s = t;
}

double sum_neon(const double* a, std::size_t n) {
  float64x2_t s = vdupq_n_f64(0.0), c = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(a + i);
    const float64x2_t t = vaddq_f64(s, x);
    const uint64x2_t ge = vcgeq_f64(vabsq_f64(s), vabsq_f64(x));
    const float64x2_t big = vbslq_f64(ge, s, x);
    const float64x2_t small = vbslq_f64(ge, x, s);
    c = vaddq_f64(c, vaddq_f64(vsubq_f64(big, t), small));
    s = t;
  }
  double ss = 0.0, cc = 0.0;
  scalar_neumaier(ss, cc, vgetq_lane_f64(s, 0));
  scalar_neumaier(ss, cc, vgetq_lane_f64(s, 1));
  scalar_neumaier(ss, cc, vgetq_lane_f64(c, 0));
  scalar_neumaier(ss, cc, vgetq_lane_f64(c, 1));
  for (; i < n; ++i) scalar_neumaier(ss, cc, a[i]);
  return ss + cc;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t s = vdupq_n_f64(0.0), c = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t t = vaddq_f64(s, x);
    const uint64x2_t ge = vcgeq_f64(vabsq_f64(s), vabsq_f64(x));
    const float64x2_t big = vbslq_f64(ge, s, x);
    const float64x2_t small = vbslq_f64(ge, x, s);
    c = vaddq_f64(c, vaddq_f64(vsubq_f64(big, t), small));
    s = t;
  }
  double ss = 0.0, cc = 0.0;
  scalar_neumaier(ss, cc, vgetq_lane_f64(s, 0));
  scalar_neumaier(ss, cc, vgetq_lane_f64(s, 1));
  scalar_neumaier(ss, cc, vgetq_lane_f64(c, 0));
  scalar_neumaier(ss, cc, vgetq_lane_f64(c, 1));
  for (; i < n; ++i) scalar_neumaier(ss, cc, a[i] * b[i]);
  return ss + cc;
}

void axpy_neon(double* out, const double* a, double cst, std::size_t n) {
  const float64x2_t c = vdupq_n_f64(cst);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(vld1q_f64(a + i), c);
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(out + i), prod));
  }
  for (; i < n; ++i) out[i] += a[i] * cst;
}

void conv_neon(const double* a, std::size_t na, const double* b,
               std::size_t nb, double* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0.0) continue;
    axpy_neon(out + i, b, a[i], nb);
  }
}

void pow_fill_neon(double* out, double first, std::size_t n, double s) {
  const double rs = std::nearbyint(s);
  if (rs == s && rs >= 1.0 && rs <= 64.0) {
    const unsigned p = static_cast<unsigned>(rs);
    for (std::size_t i = 0; i < n; ++i) {
      const double base = 1.0 / (first + double(i));
      double acc = 1.0, sq = base;
      unsigned e = p;
      while (e) {
        if (e & 1u) acc *= sq;
        sq *= sq;
        e >>= 1u;
      }
      out[i] = acc;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(first + double(i), -s);
  }
}

const Ops kNeonOps = {"neon",    sum_neon,  dot_neon,
                      axpy_neon, conv_neon, pow_fill_neon};

}  // namespace

bool neon_available() { return true; }
const Ops* neon_ops_or_null() { return &kNeonOps; }

}  // namespace mzv::kernels

#else  // non-aarch64 build: no NEON variant

namespace mzv::kernels {
bool neon_available() { return false; }
const Ops* neon_ops_or_null() { return nullptr; }
}  // namespace mzv::kernels

#endif
