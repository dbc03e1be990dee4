#include <immintrin.h>

#include "kernels_impl.hpp"

// std::complex<double> is layout-compatible with double[2], so a __m256d
// holds two interleaved complex values: [re0, im0, re1, im1].

namespace qrf::kernels::detail {

namespace {

inline const double* as_doubles(const Complex* x) { return reinterpret_cast<const double*>(x); }
inline double* as_doubles(Complex* x) { return reinterpret_cast<double*>(x); }

// |x_i|² for four consecutive complex values, in order.
inline __m256d norms4(const double* p) {
  const __m256d lo = _mm256_loadu_pd(p);
  const __m256d hi = _mm256_loadu_pd(p + 4);
  // hadd gives [|x0|², |x2|², |x1|², |x3|²]
  const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(lo, lo), _mm256_mul_pd(hi, hi));
  return _mm256_permute4x64_pd(h, 0b11'01'10'00);
}

}  // namespace

double sum_norm_sq_avx2(const Complex* x, std::size_t n) {
  const double* p = as_doubles(x);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d a = _mm256_loadu_pd(p + i);
    const __m256d b = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, b));
  }
  for (; i + 4 <= len; i += 4) {
    const __m256d a = _mm256_loadu_pd(p + i);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) total += p[i] * p[i];
  return total;
}

void scale_avx2(Complex a, const Complex* x, Complex* out, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* src = as_doubles(x);
  double* dst = as_doubles(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(src + 2 * i);
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    // [ar·re − ai·im, ar·im + ai·re] per complex lane
    const __m256d r = _mm256_addsub_pd(_mm256_mul_pd(v, ar), _mm256_mul_pd(swapped, ai));
    _mm256_storeu_pd(dst + 2 * i, r);
  }
  for (; i < n; ++i) out[i] = a * x[i];
}

void flip_pair_weights_avx2(const Complex* x, double* out, std::size_t n) {
  const double* p = as_doubles(x);
  std::size_t b = 0;
  if (n % 4 == 0) {
    for (; b + 4 <= n; b += 4) {
      const __m256d front = norms4(p + 2 * b);
      const __m256d back = norms4(p + 2 * (n - 4 - b));
      const __m256d reversed = _mm256_permute4x64_pd(back, 0b00'01'10'11);
      _mm256_storeu_pd(out + b, _mm256_add_pd(front, reversed));
    }
  }
  for (; b < n; ++b) out[b] = std::norm(x[b]) + std::norm(x[n - 1 - b]);
}

}  // namespace qrf::kernels::detail
