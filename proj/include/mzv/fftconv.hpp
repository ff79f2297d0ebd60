#pragma once
/// @file fftconv.hpp
/// @brief Additive-convolution helper: direct SIMD kernel for small sizes,
///        FFT (FFTW3) for large ones, with a per-entry noise bound.
///
/// The summation engines regroup independent summation variables by their
/// total, which turns products of per-variable weight arrays into additive
/// convolutions.  Arrays here are dense, 0-based; the caller tracks any
/// index offset separately.

#include <cstddef>
#include <vector>

namespace mzv {

/// Full linear convolution (length na+nb-1).
///
/// On return `*noise_abs` bounds the absolute error of every output entry
/// (roundoff for the direct path, the standard eps*log2(N)*|a|_2*|b|_2
/// envelope for the FFT path, with a safety factor).
std::vector<double> conv_full(const std::vector<double>& a,
                              const std::vector<double>& b,
                              double* noise_abs);

/// Force the direct kernel (exposed for tests).
std::vector<double> conv_direct(const std::vector<double>& a,
                                const std::vector<double>& b,
                                double* noise_abs);

/// Force the FFT path (exposed for tests).
std::vector<double> conv_fft(const std::vector<double>& a,
                             const std::vector<double>& b,
                             double* noise_abs);

}  // namespace mzv
