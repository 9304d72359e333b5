#include "origami/kernels.hpp"

namespace origami::kernels {

namespace {

void matmul(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double* yc = y + j * n;
    for (std::size_t r = 0; r < n; ++r) yc[r] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double s = x[j * n + k];
      if (s == 0.0) continue;
      const double* ac = a + k * n;
      for (std::size_t r = 0; r < n; ++r) yc[r] += ac[r] * s;
    }
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", matmul, dot, axpy, scale};
  return set;
}

}  // namespace origami::kernels
