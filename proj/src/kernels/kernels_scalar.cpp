#include "qrf/kernels.hpp"

#include "kernels_impl.hpp"

namespace qrf::kernels::detail {

double sum_norm_sq_scalar(const Complex* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

void scale_scalar(Complex a, const Complex* x, Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

void flip_pair_weights_scalar(const Complex* x, double* out, std::size_t n) {
  for (std::size_t b = 0; b < n; ++b) out[b] = std::norm(x[b]) + std::norm(x[n - 1 - b]);
}

}  // namespace qrf::kernels::detail
