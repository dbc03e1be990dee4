#pragma once

#include "qrf/kernels.hpp"

namespace qrf::kernels::detail {

double sum_norm_sq_scalar(const Complex* x, std::size_t n);
void scale_scalar(Complex a, const Complex* x, Complex* out, std::size_t n);
void flip_pair_weights_scalar(const Complex* x, double* out, std::size_t n);

#if defined(QRF_HAVE_AVX2)
double sum_norm_sq_avx2(const Complex* x, std::size_t n);
void scale_avx2(Complex a, const Complex* x, Complex* out, std::size_t n);
void flip_pair_weights_avx2(const Complex* x, double* out, std::size_t n);
#endif

}  // namespace qrf::kernels::detail
