/// @file kernels_avx2.cpp
/// @brief AVX2 kernel variants (x86-64).  Compiled with -mavx2 but only
///        dispatched to after a runtime cpuid check.
///
/// Determinism notes:
///   * axpy/conv use mul-then-add (no FMA) so each element sees the same
///     rounding as the scalar reference -> bitwise-equal results;
///   * pow_fill's integer path runs the identical division + binary-powering
///     sequence per lane -> bitwise-equal results;
///   * sum/dot run four independent Neumaier accumulators and combine at the
///     end; they reassociate and are therefore equivalence-tested within a
///     tolerance rather than bitwise.

#include "mzv/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace mzv::kernels {
namespace {

struct LaneAcc {
  __m256d s, c;
};

inline void neumaier_step(LaneAcc& acc, __m256d x) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  const __m256d t = _mm256_add_pd(acc.s, x);
  const __m256d abs_s = _mm256_andnot_pd(signmask, acc.s);
  const __m256d abs_x = _mm256_andnot_pd(signmask, x);
  const __m256d s_ge = _mm256_cmp_pd(abs_s, abs_x, _CMP_GE_OQ);
  const __m256d big = _mm256_blendv_pd(x, acc.s, s_ge);
  const __m256d small = _mm256_blendv_pd(acc.s, x, s_ge);
  acc.c = _mm256_add_pd(acc.c,
                        _mm256_add_pd(_mm256_sub_pd(big, t), small));
  acc.s = t;
}

inline void scalar_neumaier(double& s, double& c, double x) {
  const double t = s + x;
  if (std::fabs(s) >= std::fabs(x))
    c += (s - t) + x;
  else
    c += (x - t) + s;
  s = t;
}

inline double combine(const LaneAcc& acc, double tail_s, double tail_c) {
  alignas(32) double sv[4], cv[4];
  _mm256_store_pd(sv, acc.s);
  _mm256_store_pd(cv, acc.c);
  double s = 0.0, c = 0.0;
  for (double v : sv) scalar_neumaier(s, c, v);
  for (double v : cv) scalar_neumaier(s, c, v);
  scalar_neumaier(s, c, tail_s);
  scalar_neumaier(s, c, tail_c);
  return s + c;
}

double sum_avx2(const double* a, std::size_t n) {
  LaneAcc acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) neumaier_step(acc, _mm256_loadu_pd(a + i));
  double ts = 0.0, tc = 0.0;
  for (; i < n; ++i) scalar_neumaier(ts, tc, a[i]);
  return combine(acc, ts, tc);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  LaneAcc acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    neumaier_step(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                     _mm256_loadu_pd(b + i)));
  double ts = 0.0, tc = 0.0;
  for (; i < n; ++i) scalar_neumaier(ts, tc, a[i] * b[i]);
  return combine(acc, ts, tc);
}

void axpy_avx2(double* out, const double* a, double cst, std::size_t n) {
  const __m256d c = _mm256_set1_pd(cst);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), c);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), prod));
  }
  for (; i < n; ++i) out[i] += a[i] * cst;
}

void conv_avx2(const double* a, std::size_t na, const double* b,
               std::size_t nb, double* out) {
  for (std::size_t i = 0; i < na; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    axpy_avx2(out + i, b, ai, nb);
  }
}

void pow_fill_avx2(double* out, double first, std::size_t n, double s) {
  const double rs = std::nearbyint(s);
  if (rs == s && rs >= 1.0 && rs <= 64.0) {
    const unsigned p = static_cast<unsigned>(rs);
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d step = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d x =
          _mm256_add_pd(_mm256_set1_pd(first + double(i)), step);
      const __m256d base = _mm256_div_pd(ones, x);
      __m256d acc = ones, sq = base;
      unsigned e = p;
      while (e) {
        if (e & 1u) acc = _mm256_mul_pd(acc, sq);
        sq = _mm256_mul_pd(sq, sq);
        e >>= 1u;
      }
      _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
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

const Ops kAvx2Ops = {"avx2",    sum_avx2,  dot_avx2,
                      axpy_avx2, conv_avx2, pow_fill_avx2};

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }
const Ops* avx2_ops_or_null() { return avx2_available() ? &kAvx2Ops : nullptr; }

}  // namespace mzv::kernels

#else  // non-x86 build: no AVX2 variant

namespace mzv::kernels {
bool avx2_available() { return false; }
const Ops* avx2_ops_or_null() { return nullptr; }
}  // namespace mzv::kernels

#endif
