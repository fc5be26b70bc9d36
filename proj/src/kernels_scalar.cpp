// Scalar reference kernels. These define the semantics the vectorized
// variants are tested against.

#include "dfsim/kernels.hpp"

namespace dfsim::kernels {

namespace {

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
                 const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cplx{0.0, 0.0};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t kk = 0; kk < k; ++kk) {
      const cplx aik = a[i * k + kk];
      const cplx* brow = b + kk * n;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(std::size_t n, cplx alpha, cplx* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void had_real_scalar(std::size_t n, const double* w, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += w[i] * x[i];
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", gemm_scalar, axpy_scalar, scal_scalar,
                               had_real_scalar};
  return backend;
}

}  // namespace dfsim::kernels
