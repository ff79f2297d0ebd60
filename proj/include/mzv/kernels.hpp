#pragma once
/// @file kernels.hpp
/// @brief Hot-loop kernels: compensated reductions, convolution MACs and
///        power-array fills, in scalar reference and SIMD variants.
///
/// The summation engines spend nearly all their time in four loops:
/// filling arrays of m^{-s}, multiply-accumulating convolutions, and
/// compensated sums / dot products over those arrays.  Each loop has a
/// scalar reference implementation and an AVX2 variant (NEON on aarch64),
/// selected once at runtime:
///
///   * default: best variant the CPU supports;
///   * override: environment variable MZV_KERNEL=scalar|avx2|neon.
///
/// Equivalence contract (tested): for `pow_fill` with integer exponents,
/// `axpy` and `conv`, the SIMD variants execute the *same* rounding sequence
/// per element as the scalar reference and must match bit-for-bit (the build
/// disables FP contraction to keep that true).  The compensated reductions
/// reassociate across lanes and must match within a small tolerance.

#include <cstddef>
#include <string>

namespace mzv::kernels {

struct Ops {
  const char* name;

  /// Compensated (Neumaier) sum of n doubles.
  double (*sum)(const double* a, std::size_t n);

  /// Compensated dot product; products rounded element-wise (no FMA), the
  /// accumulation is compensated.
  double (*dot)(const double* a, const double* b, std::size_t n);

  /// out[i] += a[i] * c for i in [0, n)
  void (*axpy)(double* out, const double* a, double c, std::size_t n);

  /// Dense convolution MAC: out[i+j] += a[i]*b[j]; `out` must hold
  /// na+nb-1 entries and is *not* cleared here.
  void (*conv)(const double* a, std::size_t na, const double* b,
               std::size_t nb, double* out);

  /// out[i] = (first+i)^{-s}.  Integer s in [1,64] uses one division and a
  /// binary powering chain (deterministic across variants); other s fall
  /// back to per-element std::pow.
  void (*pow_fill)(double* out, double first, std::size_t n, double s);
};

/// Active kernel set (selected on first call, stable afterwards).
const Ops& ops();

/// Scalar reference set (always available; used by equivalence tests).
const Ops& scalar_ops();

/// Lookup by name: "scalar", "avx2", "neon".  Returns nullptr when the
/// variant is not compiled in or the CPU lacks the feature.
const Ops* ops_by_name(const std::string& name);

bool avx2_available();
bool neon_available();

// variant tables (internal; exposed for the dispatcher and tests)
const Ops* avx2_ops_or_null();
const Ops* neon_ops_or_null();

}  // namespace mzv::kernels
