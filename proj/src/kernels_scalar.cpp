/// @file kernels_scalar.cpp
/// @brief Scalar reference kernels.  These define the semantics the SIMD
///        variants are tested against.

#include <cmath>
#include <cstddef>

#include "mzv/kernels.hpp"

namespace mzv::kernels {
namespace {

/// Neumaier variant of compensated summation: like Kahan, but the
/// compensation also survives when the incoming term is larger than the
/// running sum.
double sum_scalar(const double* a, std::size_t n) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a[i];
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a[i] * b[i];
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

void axpy_scalar(double* out, const double* a, double cst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * cst;
}

void conv_scalar(const double* a, std::size_t na, const double* b,
                 std::size_t nb, double* out) {
  for (std::size_t i = 0; i < na; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    axpy_scalar(out + i, b, ai, nb);
  }
}

void pow_fill_scalar(double* out, double first, std::size_t n, double s) {
  const double rs = std::nearbyint(s);
  if (rs == s && rs >= 1.0 && rs <= 64.0) {
    const unsigned p = static_cast<unsigned>(rs);
    for (std::size_t i = 0; i < n; ++i) {
      // one rounded division, then a binary powering chain; the SIMD
      // variants run the identical op sequence per lane
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

const Ops kScalarOps = {"scalar",     sum_scalar,  dot_scalar,
                        axpy_scalar,  conv_scalar, pow_fill_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

}  // namespace mzv::kernels
