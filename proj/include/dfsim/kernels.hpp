#pragma once
// Low-level dense complex kernels with runtime backend selection.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant. The active backend is picked once at
// startup: AVX2 when the CPU supports it, scalar otherwise. The environment
// variable DFSIM_KERNELS=scalar|avx2 overrides the choice (falling back to
// scalar if the requested backend is unavailable). Backends are
// interchangeable up to floating-point rounding; the test suite checks them
// against each other on random inputs.

#include <complex>
#include <cstddef>
#include <string_view>

namespace dfsim::kernels {

using cplx = std::complex<double>;

// c = a * b for row-major a (m x k), b (k x n), c (m x n). c is overwritten.
using GemmFn = void (*)(std::size_t m, std::size_t k, std::size_t n,
                        const cplx* a, const cplx* b, cplx* c);
// y += alpha * x
using AxpyFn = void (*)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
// x *= alpha
using ScalFn = void (*)(std::size_t n, cplx alpha, cplx* x);
// y[i] += w[i] * x[i] with real weights w
using HadRealFn = void (*)(std::size_t n, const double* w, const cplx* x,
                           cplx* y);

struct Backend {
  std::string_view name;
  GemmFn gemm = nullptr;
  AxpyFn axpy = nullptr;
  ScalFn scal = nullptr;
  HadRealFn had_real = nullptr;
};

const Backend& scalar_backend();
// nullptr when the build or the CPU does not support AVX2+FMA.
const Backend* avx2_backend();
const Backend& active_backend();
void set_active_backend(const Backend& backend);

// Convenience wrappers through the active backend.
void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c);
void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y);
void scal(std::size_t n, cplx alpha, cplx* x);
void had_real(std::size_t n, const double* w, const cplx* x, cplx* y);

}  // namespace dfsim::kernels
