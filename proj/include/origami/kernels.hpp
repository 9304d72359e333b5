#pragma once

#include <cstddef>

namespace origami::kernels {

/// Dense double kernels for the Lyapunov frame. Square n×n matrices are
/// column-major: element (r, c) at [c·n + r].
struct KernelSet {
  const char* name;
  /// y = a · x (all n×n); y must not alias a or x.
  void (*matmul)(const double* a, const double* x, double* y, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += alpha · x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// x *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
};

const KernelSet& scalar_kernels();
/// AVX2+FMA variants; only valid to call when avx2_supported().
const KernelSet& avx2_kernels();
bool avx2_supported();
/// AVX2 when the CPU has it, scalar otherwise. ORIGAMI_KERNELS=scalar forces
/// the reference path.
const KernelSet& active_kernels();

}  // namespace origami::kernels
