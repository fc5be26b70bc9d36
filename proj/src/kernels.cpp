// Backend detection and dispatch.

#include "dfsim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace dfsim::kernels {

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend* detect_backend() {
  const Backend* avx2 = avx2_backend();
  const char* requested = std::getenv("DFSIM_KERNELS");
  if (requested != nullptr) {
    if (std::strcmp(requested, "scalar") == 0) return &scalar_backend();
    if (std::strcmp(requested, "avx2") == 0 && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &scalar_backend();
}

std::atomic<const Backend*>& active_slot() {
  static std::atomic<const Backend*> slot{detect_backend()};
  return slot;
}

}  // namespace

const Backend* avx2_backend() {
  if (!cpu_has_avx2_fma()) return nullptr;
  return detail::avx2_backend_table();
}

const Backend& active_backend() { return *active_slot().load(); }

void set_active_backend(const Backend& backend) { active_slot().store(&backend); }

void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
          const cplx* b, cplx* c) {
  active_backend().gemm(m, k, n, a, b, c);
}

void axpy(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  active_backend().axpy(n, alpha, x, y);
}

void scal(std::size_t n, cplx alpha, cplx* x) {
  active_backend().scal(n, alpha, x);
}

void had_real(std::size_t n, const double* w, const cplx* x, cplx* y) {
  active_backend().had_real(n, w, x, y);
}

}  // namespace dfsim::kernels
