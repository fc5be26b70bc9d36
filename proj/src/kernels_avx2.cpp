// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; nothing here may run unless the dispatcher has confirmed
// CPU support. Complex numbers are interleaved (re, im) doubles, so one
// 256-bit lane holds two complex values.

#include "kernels_detail.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace dfsim::kernels {

namespace {

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// prod = (ar + i*ai) * vb for two interleaved complex values.
inline __m256d complex_mul(__m256d var, __m256d vai, __m256d vb) {
  const __m256d swapped = _mm256_permute_pd(vb, 0x5);  // (bi, br) pairs
  return _mm256_fmaddsub_pd(var, vb, _mm256_mul_pd(vai, swapped));
}

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
               const cplx* b, cplx* c) {
  const double* ad = as_doubles(a);
  const double* bd = as_doubles(b);
  double* cd = as_doubles(c);

  const std::size_t row_doubles = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = cd + i * row_doubles;
    {
      const __m256d zero = _mm256_setzero_pd();
      std::size_t j = 0;
      for (; j + 4 <= row_doubles; j += 4) _mm256_storeu_pd(crow + j, zero);
      for (; j < row_doubles; ++j) crow[j] = 0.0;
    }
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double ar = ad[2 * (i * k + kk)];
      const double ai = ad[2 * (i * k + kk) + 1];
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      const double* brow = bd + kk * row_doubles;
      std::size_t j = 0;
      for (; j + 8 <= row_doubles; j += 8) {
        const __m256d vb0 = _mm256_loadu_pd(brow + j);
        const __m256d vb1 = _mm256_loadu_pd(brow + j + 4);
        const __m256d vc0 = _mm256_loadu_pd(crow + j);
        const __m256d vc1 = _mm256_loadu_pd(crow + j + 4);
        _mm256_storeu_pd(crow + j,
                         _mm256_add_pd(vc0, complex_mul(var, vai, vb0)));
        _mm256_storeu_pd(crow + j + 4,
                         _mm256_add_pd(vc1, complex_mul(var, vai, vb1)));
      }
      for (; j + 4 <= row_doubles; j += 4) {
        const __m256d vb = _mm256_loadu_pd(brow + j);
        const __m256d vc = _mm256_loadu_pd(crow + j);
        _mm256_storeu_pd(crow + j,
                         _mm256_add_pd(vc, complex_mul(var, vai, vb)));
      }
      for (; j < row_doubles; j += 2) {
        const double br = brow[j], bi = brow[j + 1];
        crow[j] += ar * br - ai * bi;
        crow[j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  const std::size_t nd = 2 * n;
  std::size_t j = 0;
  for (; j + 4 <= nd; j += 4) {
    const __m256d vx = _mm256_loadu_pd(xd + j);
    const __m256d vy = _mm256_loadu_pd(yd + j);
    _mm256_storeu_pd(yd + j, _mm256_add_pd(vy, complex_mul(var, vai, vx)));
  }
  for (; j < nd; j += 2) {
    const double xr = xd[j], xi = xd[j + 1];
    yd[j] += ar * xr - ai * xi;
    yd[j + 1] += ar * xi + ai * xr;
  }
}

void scal_avx2(std::size_t n, cplx alpha, cplx* x) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  double* xd = as_doubles(x);
  const std::size_t nd = 2 * n;
  std::size_t j = 0;
  for (; j + 4 <= nd; j += 4) {
    const __m256d vx = _mm256_loadu_pd(xd + j);
    _mm256_storeu_pd(xd + j, complex_mul(var, vai, vx));
  }
  for (; j < nd; j += 2) {
    const double xr = xd[j], xi = xd[j + 1];
    xd[j] = ar * xr - ai * xi;
    xd[j + 1] = ar * xi + ai * xr;
  }
}

void had_real_avx2(std::size_t n, const double* w, const cplx* x, cplx* y) {
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // (w[i], w[i], w[i+1], w[i+1])
    const __m256d vw = _mm256_permute4x64_pd(
        _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), _MM_SHUFFLE(1, 1, 0, 0));
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_fmadd_pd(vw, vx, vy));
  }
  for (; i < n; ++i) {
    yd[2 * i] += w[i] * xd[2 * i];
    yd[2 * i + 1] += w[i] * xd[2 * i + 1];
  }
}

}  // namespace

namespace detail {

const Backend* avx2_backend_table() {
  static const Backend backend{"avx2", gemm_avx2, axpy_avx2, scal_avx2,
                               had_real_avx2};
  return &backend;
}

}  // namespace detail
}  // namespace dfsim::kernels

#else  // !(__AVX2__ && __FMA__)

namespace dfsim::kernels::detail {

const Backend* avx2_backend_table() { return nullptr; }

}  // namespace dfsim::kernels::detail

#endif
