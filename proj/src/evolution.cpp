#include "dfsim/evolution.hpp"

#include <cmath>
#include <numbers>

#include "dfsim/kernels.hpp"

namespace dfsim {

double envelope_value(Envelope env, double t, double tau) {
  switch (env) {
    case Envelope::Constant:
      return 1.0;
    case Envelope::SinSquared: {
      const double s = std::sin(std::numbers::pi * t / tau);
      return s * s;
    }
  }
  throw SimError("envelope_value: unknown envelope");
}

double envelope_duration(Envelope env, double pulse_area) {
  if (!(pulse_area > 0.0)) {
    throw SimError("envelope_duration: pulse area must be positive");
  }
  switch (env) {
    case Envelope::Constant:
      return pulse_area;
    case Envelope::SinSquared:
      return 2.0 * pulse_area;  // unit peak, mean value 1/2
  }
  throw SimError("envelope_duration: unknown envelope");
}

SpectralEvolution::SpectralEvolution(const ComplexMatrix& h_unit, Envelope env,
                                     double pulse_area, int segments)
    : h_unit_(h_unit),
      env_(env),
      pulse_area_(pulse_area),
      tau_(envelope_duration(env, pulse_area)),
      segments_(segments),
      eig_(eigh(h_unit)) {
  if (segments_ < 1) throw SimError("SpectralEvolution: segments < 1");
  v_dagger_ = dagger(eig_.eigenvectors);

  const double dt = tau_ / segments_;
  segment_value_.resize(segments_);
  cumulative_area_.resize(segments_ + 1);
  cumulative_area_[0] = 0.0;
  long double acc = 0.0L;
  for (int s = 0; s < segments_; ++s) {
    const double mid = (static_cast<double>(s) + 0.5) * dt;
    segment_value_[s] = envelope_value(env_, mid, tau_);
    acc += static_cast<long double>(segment_value_[s]) * dt;
    cumulative_area_[s + 1] = static_cast<double>(acc);
  }
}

double SpectralEvolution::area_at(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= tau_) return cumulative_area_.back();
  const double dt = tau_ / segments_;
  int s = static_cast<int>(t / dt);
  if (s >= segments_) s = segments_ - 1;
  return cumulative_area_[s] + segment_value_[s] * (t - s * dt);
}

std::vector<cplx> SpectralEvolution::phases_at(double t) const {
  const double area = area_at(t);
  std::vector<cplx> phases(eig_.eigenvalues.size());
  for (std::size_t k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -eig_.eigenvalues[k] * area);
  }
  return phases;
}

ComplexMatrix SpectralEvolution::unitary_at(double t) const {
  const std::vector<cplx> phases = phases_at(t);
  const std::size_t n = dim();
  ComplexMatrix scaled(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      scaled(i, k) = eig_.eigenvectors(i, k) * phases[k];
    }
  }
  return matmul(scaled, v_dagger_);
}

std::vector<cplx> SpectralEvolution::to_eigenbasis(
    const StateVector& psi) const {
  if (psi.dim != dim()) {
    throw DimensionMismatch("to_eigenbasis: state dimension mismatch");
  }
  std::vector<cplx> y(psi.dim);
  kernels::gemm(psi.dim, psi.dim, 1, v_dagger_.data(), psi.amplitudes.data(),
                y.data());
  return y;
}

StateVector SpectralEvolution::evolve_state(const StateVector& psi0,
                                            double t) const {
  std::vector<cplx> y = to_eigenbasis(psi0);
  const std::vector<cplx> phases = phases_at(t);
  for (std::size_t k = 0; k < y.size(); ++k) y[k] *= phases[k];
  StateVector out(psi0.dim);
  kernels::gemm(psi0.dim, psi0.dim, 1, eig_.eigenvectors.data(), y.data(),
                out.amplitudes.data());
  return out;
}

ProjectedEvolution::ProjectedEvolution(const SpectralEvolution& evo,
                                       const DfsEncoding& enc)
    : evo_(&evo) {
  if (enc.full_dim() != evo.dim()) {
    throw DimensionMismatch("ProjectedEvolution: encoding space " +
                            std::to_string(enc.full_dim()) +
                            " vs evolution dimension " +
                            std::to_string(evo.dim()));
  }
  const std::size_t d = enc.dim();
  const std::size_t n = evo.dim();
  rows_ = ComplexMatrix(d, n);
  const ComplexMatrix& v = evo.eigensystem().eigenvectors;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t row = enc.product_state_index(i);
    for (std::size_t k = 0; k < n; ++k) rows_(i, k) = v(row, k);
  }
  rows_dag_ = dagger(rows_);
}

ComplexMatrix ProjectedEvolution::block_at(double t) const {
  const std::vector<cplx> phases = evo_->phases_at(t);
  const std::size_t d = rows_.rows();
  const std::size_t n = rows_.cols();
  // W = R diag(phases) R†
  ComplexMatrix scaled(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      scaled(i, k) = rows_(i, k) * phases[k];
    }
  }
  ComplexMatrix w(d, d);
  kernels::gemm(d, n, d, scaled.data(), rows_dag_.data(), w.data());
  return w;
}

ComplexMatrix ProjectedEvolution::embedded_columns_at(double t) const {
  const std::vector<cplx> phases = evo_->phases_at(t);
  const std::size_t d = rows_.rows();
  const std::size_t n = rows_.cols();
  // U B = V diag(phases) (V† B) with V† B = rows_†.
  ComplexMatrix scaled(n, d);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      scaled(k, j) = phases[k] * rows_dag_(k, j);
    }
  }
  ComplexMatrix out(n, d);
  kernels::gemm(n, n, d, evo_->eigensystem().eigenvectors.data(),
                scaled.data(), out.data());
  return out;
}

std::vector<cplx> ProjectedEvolution::coefficients_at(
    double t, const std::vector<cplx>& y) const {
  const std::size_t d = rows_.rows();
  const std::size_t n = rows_.cols();
  if (y.size() != n) {
    throw DimensionMismatch("coefficients_at: eigenbasis vector mismatch");
  }
  const std::vector<cplx> phases = evo_->phases_at(t);
  std::vector<cplx> c(d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    cplx sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) sum += rows_(i, k) * (phases[k] * y[k]);
    c[i] = sum;
  }
  return c;
}

}  // namespace dfsim
