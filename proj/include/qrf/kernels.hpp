#pragma once

// Data-parallel inner loops shared by the state and measure code. Every
// kernel has a portable scalar reference and, on x86-64, an AVX2 variant.
// The active table is picked once at first use from the host CPU; setting
// QRF_KERNELS=scalar in the environment forces the reference path.

#include <complex>
#include <cstddef>
#include <span>

namespace qrf::kernels {

using Complex = std::complex<double>;

struct KernelTable {
  const char* name;
  // Σ |x_i|²
  double (*sum_norm_sq)(const Complex* x, std::size_t n);
  // out_i = a · x_i
  void (*scale)(Complex a, const Complex* x, Complex* out, std::size_t n);
  // out_b = |x_b|² + |x_{n-1-b}|²; pairs each basis index with its
  // all-bits-flipped partner when n is a power of two.
  void (*flip_pair_weights)(const Complex* x, double* out, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

const KernelTable& active() noexcept;

inline double sum_norm_sq(std::span<const Complex> x) {
  return active().sum_norm_sq(x.data(), x.size());
}

inline void scale(Complex a, std::span<const Complex> x, std::span<Complex> out) {
  active().scale(a, x.data(), out.data(), x.size());
}

inline void flip_pair_weights(std::span<const Complex> x, std::span<double> out) {
  active().flip_pair_weights(x.data(), out.data(), x.size());
}

}  // namespace qrf::kernels
