#include "dfsim/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dfsim {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.cols(); ++q) {
      sum += 2.0 * std::norm(a(p, q));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen eigh(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw DimensionMismatch("eigh: not square");
  if (!is_hermitian(h)) {
    throw NonHermitianInput("eigh: input exceeds Hermiticity tolerance " +
                            std::to_string(kHermitianTol));
  }
  const std::size_t n = h.rows();

  // Work on the exactly-Hermitian part; the input may be off by <= tol.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  const double target = 1e-15 * scale;
  constexpr int kMaxSweeps = 60;

  for (int sweep = 0; sweep < kMaxSweeps && offdiag_norm(a) > target;
       ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const cplx phase = a(p, q) / r;  // a_pq = r * phase

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]]; the diagonal factor
        // turns the pivot entry real, the plane rotation then zeroes it.
        const cplx sp = s * std::conj(phase);
        const cplx cp = c * std::conj(phase);

        // Columns: a <- a * G in coordinates (p, q).
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - sp * aiq;
          a(i, q) = s * aip + cp * aiq;
        }
        // Rows: a <- G† * a.
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - std::conj(sp) * aqj;
          a(q, j) = s * apj + std::conj(cp) * aqj;
        }
        // Eigenvectors accumulate the column transform.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip - sp * viq;
          v(i, q) = s * vip + cp * viq;
        }
        a(p, q) = cplx{0.0, 0.0};
        a(q, p) = cplx{0.0, 0.0};
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return out;
}

ComplexMatrix matexp_hermitian(const ComplexMatrix& h, double t) {
  const HermitianEigen eig = eigh(h);
  const std::size_t n = h.rows();
  // V * diag(exp(-i lambda t)) * V†
  ComplexMatrix scaled(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx phase = std::polar(1.0, -eig.eigenvalues[k] * t);
    for (std::size_t i = 0; i < n; ++i) {
      scaled(i, k) = eig.eigenvectors(i, k) * phase;
    }
  }
  return matmul(scaled, dagger(eig.eigenvectors));
}

double min_eigenvalue_hermitian(const ComplexMatrix& h) {
  return eigh(h).eigenvalues.front();
}

double max_eigenvalue_hermitian(const ComplexMatrix& h) {
  return eigh(h).eigenvalues.back();
}

double spectral_norm_hermitian(const ComplexMatrix& h) {
  const HermitianEigen eig = eigh(h);
  return std::max(std::abs(eig.eigenvalues.front()),
                  std::abs(eig.eigenvalues.back()));
}

}  // namespace dfsim
