#include <immintrin.h>

#include <cstdlib>
#include <cstring>

#include "origami/kernels.hpp"

namespace origami::kernels {

namespace {

#define AVX2_FN __attribute__((target("avx2,fma")))

AVX2_FN void matmul(const double* a, const double* x, double* y, std::size_t n) {
  const std::size_t wide = n & ~std::size_t{3};
  for (std::size_t j = 0; j < n; ++j) {
    double* yc = y + j * n;
    std::memset(yc, 0, n * sizeof(double));
    for (std::size_t k = 0; k < n; ++k) {
      const double s = x[j * n + k];
      if (s == 0.0) continue;
      const double* ac = a + k * n;
      const __m256d sv = _mm256_set1_pd(s);
      std::size_t r = 0;
      for (; r < wide; r += 4)
        _mm256_storeu_pd(yc + r, _mm256_fmadd_pd(_mm256_loadu_pd(ac + r), sv, _mm256_loadu_pd(yc + r)));
      for (; r < n; ++r) yc[r] += ac[r] * s;
    }
  }
}

AVX2_FN double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

AVX2_FN void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

AVX2_FN void scale(double alpha, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

#undef AVX2_FN

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet set{"avx2", matmul, dot, axpy, scale};
  return set;
}

bool avx2_supported() {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    const char* force = std::getenv("ORIGAMI_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return scalar_kernels();
    return avx2_supported() ? avx2_kernels() : scalar_kernels();
  }();
  return chosen;
}

}  // namespace origami::kernels
