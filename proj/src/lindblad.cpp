#include "dfsim/lindblad.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "dfsim/hermitian_eig.hpp"
#include "dfsim/kernels.hpp"

namespace dfsim {

namespace {

constexpr double kStepTraceBudget = 1e-9;
constexpr double kStabilityLimit = 0.05;

int qubit_count_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionMismatch(
        "lindblad: state dimension must be a power of two, got " +
        std::to_string(dim));
  }
  return std::bit_width(dim) - 1;
}

// All collapse operators here are sigma_z products, hence diagonal; the
// dissipator reduces to an entrywise multiply with the real weights
//   W_ij = -rate/2 * sum_ops (d_i - d_j)^2,
// where d are the collapse operator's diagonal entries.
std::vector<double> dissipator_weights(std::size_t dim,
                                       const NoiseSpec& noise) {
  const int n_qubits = qubit_count_for_dim(dim);
  std::vector<double> w(dim * dim, 0.0);
  if (noise.rate == 0.0) return w;
  if (noise.collapse == CollapseKind::Collective) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double di = n_qubits - 2.0 * std::popcount(i);
      for (std::size_t j = 0; j < dim; ++j) {
        const double dj = n_qubits - 2.0 * std::popcount(j);
        w[i * dim + j] = -0.5 * noise.rate * (di - dj) * (di - dj);
      }
    }
  } else {
    // Per-qubit sigma_z entries differ by +-2 exactly where the bit differs.
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        w[i * dim + j] = -2.0 * noise.rate *
                         static_cast<double>(std::popcount(i ^ j));
      }
    }
  }
  return w;
}

// RK4 integrator for d rho/dt = -i J(t) [H, rho] + D(rho) with Hermitian
// rho. The commutator is built from the single product M = H rho as
// M - M†, which keeps every stage exactly Hermitian.
class Rk4Lindblad {
 public:
  Rk4Lindblad(const ComplexMatrix& h, const NoiseSpec& noise)
      : dim_(h.rows()),
        h_(h),
        weights_(dissipator_weights(dim_, noise)),
        m_(dim_ * dim_),
        stage_(dim_ * dim_),
        k1_(dim_ * dim_),
        k2_(dim_ * dim_),
        k3_(dim_ * dim_),
        k4_(dim_ * dim_) {}

  // One step from t to t + dt; scale(t) is the envelope value J(t).
  // Returns the trace drift removed by renormalization.
  double step(std::vector<cplx>& rho, double t, double dt,
              const std::function<double(double)>& scale) {
    rhs(rho, scale(t), k1_);
    combine(rho, 0.5 * dt, k1_);
    rhs(stage_, scale(t + 0.5 * dt), k2_);
    combine(rho, 0.5 * dt, k2_);
    rhs(stage_, scale(t + 0.5 * dt), k3_);
    combine(rho, dt, k3_);
    rhs(stage_, scale(t + dt), k4_);

    kernels::axpy(rho.size(), cplx{dt / 6.0, 0.0}, k1_.data(), rho.data());
    kernels::axpy(rho.size(), cplx{dt / 3.0, 0.0}, k2_.data(), rho.data());
    kernels::axpy(rho.size(), cplx{dt / 3.0, 0.0}, k3_.data(), rho.data());
    kernels::axpy(rho.size(), cplx{dt / 6.0, 0.0}, k4_.data(), rho.data());

    double tr = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) tr += rho[i * dim_ + i].real();
    const double drift = std::abs(tr - 1.0);
    if (drift > kStepTraceBudget) {
      throw StepTooLarge("lindblad: trace drift " + std::to_string(drift) +
                         " in one step exceeds budget");
    }
    kernels::scal(rho.size(), cplx{1.0 / tr, 0.0}, rho.data());
    return drift;
  }

 private:
  void rhs(const std::vector<cplx>& sigma, double j_scale,
           std::vector<cplx>& out) {
    kernels::gemm(dim_, dim_, dim_, h_.data(), sigma.data(), m_.data());
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        const cplx commutator = m_[i * dim_ + j] -
                                std::conj(m_[j * dim_ + i]);
        out[i * dim_ + j] = cplx{0.0, -j_scale} * commutator;
      }
    }
    kernels::had_real(sigma.size(), weights_.data(), sigma.data(), out.data());
  }

  // stage = rho + factor * k
  void combine(const std::vector<cplx>& rho, double factor,
               const std::vector<cplx>& k) {
    stage_ = rho;
    kernels::axpy(stage_.size(), cplx{factor, 0.0}, k.data(), stage_.data());
  }

  std::size_t dim_;
  ComplexMatrix h_;
  std::vector<double> weights_;
  std::vector<cplx> m_;
  std::vector<cplx> stage_;
  std::vector<cplx> k1_, k2_, k3_, k4_;
};

LindbladResult evolve_scaled(const ComplexMatrix& h, const NoiseSpec& noise,
                             const DensityState& rho0, double duration,
                             double dt,
                             const std::function<double(double)>& scale) {
  if (h.rows() != h.cols()) throw DimensionMismatch("lindblad: H not square");
  if (!is_hermitian(h)) {
    throw NonHermitianInput("lindblad: Hamiltonian is not Hermitian");
  }
  if (h.rows() != rho0.rho.rows()) {
    throw DimensionMismatch("lindblad: H and rho dimensions differ");
  }
  rho0.validate();
  if (!(dt > 0.0) || dt > duration) {
    throw StepTooLarge("lindblad: need 0 < dt <= duration");
  }
  if (dt * spectral_norm_hermitian(h) > kStabilityLimit) {
    throw StepTooLarge("lindblad: dt * ||H|| exceeds " +
                       std::to_string(kStabilityLimit));
  }

  const std::size_t dim = h.rows();
  const std::size_t steps =
      static_cast<std::size_t>(std::ceil(duration / dt - 1e-9));
  const double dt_eff = duration / static_cast<double>(steps);

  // Integrate the Hermitian part; the input may be off by its tolerance.
  std::vector<cplx> rho(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      rho[i * dim + j] =
          0.5 * (rho0.rho(i, j) + std::conj(rho0.rho(j, i)));
    }
  }

  Rk4Lindblad integrator(h, noise);
  LindbladDiagnostics diag;
  diag.steps = steps;
  for (std::size_t s = 0; s < steps; ++s) {
    const double drift =
        integrator.step(rho, s * dt_eff, dt_eff, scale);
    diag.max_trace_drift = std::max(diag.max_trace_drift, drift);
  }

  ComplexMatrix out(dim, dim, std::move(rho));
  diag.max_hermiticity_error = max_abs_diff(out, dagger(out));
  diag.min_eigenvalue = min_eigenvalue_hermitian(out);
  if (diag.min_eigenvalue < -1e-8) {
    throw StateInvalid("lindblad: final state lost positivity (min eig " +
                       std::to_string(diag.min_eigenvalue) + ")");
  }
  return LindbladResult{DensityState{std::move(out)}, diag};
}

}  // namespace

DensityState DensityState::from_pure(const StateVector& psi) {
  DensityState state;
  state.rho = ComplexMatrix(psi.dim, psi.dim);
  for (std::size_t i = 0; i < psi.dim; ++i) {
    for (std::size_t j = 0; j < psi.dim; ++j) {
      state.rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    }
  }
  return state;
}

void DensityState::validate() const {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw StateInvalid("DensityState: not a square matrix");
  }
  if (!is_hermitian(rho, 1e-10)) {
    throw StateInvalid("DensityState: not Hermitian within 1e-10");
  }
  const double tr = trace(rho).real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw StateInvalid("DensityState: trace " + std::to_string(tr) +
                       " is not 1 within 1e-10");
  }
  // Work on the exactly-Hermitian part so the eigensolver accepts it.
  ComplexMatrix sym(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    for (std::size_t j = 0; j < rho.cols(); ++j) {
      sym(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    }
  }
  if (min_eigenvalue_hermitian(sym) < -1e-8) {
    throw StateInvalid("DensityState: negative eigenvalue below -1e-8");
  }
}

LindbladResult lindblad_evolve(const ComplexMatrix& h, const NoiseSpec& noise,
                               const DensityState& rho0, double duration,
                               double dt) {
  return evolve_scaled(h, noise, rho0, duration, dt,
                       [](double) { return 1.0; });
}

LindbladResult lindblad_step(const ComplexMatrix& h, const NoiseSpec& noise,
                             const DensityState& rho0, double dt) {
  return lindblad_evolve(h, noise, rho0, dt, dt);
}

double open_gate_fidelity(const ProtocolSpec& spec, const NoiseSpec& noise,
                          const StateVector& input) {
  spec.validate();
  const CouplingConfig config = protocol_config(spec, 1.0);
  const ComplexMatrix h = build_hamiltonian(config);
  const DfsEncoding enc = protocol_encoding(spec.kind);
  const SpectralEvolution evo(h, spec.envelope, spec.pulse_area,
                              spec.segments);

  if (input.dim != enc.full_dim()) {
    throw DimensionMismatch("open_gate_fidelity: input dimension mismatch");
  }
  if (std::abs(input.norm() - 1.0) > 1e-10) {
    throw StateInvalid("open_gate_fidelity: input state is not normalized");
  }
  double dfs_weight = 0.0;
  for (std::size_t i = 0; i < enc.dim(); ++i) {
    dfs_weight += std::norm(input.amplitudes[enc.product_state_index(i)]);
  }
  if (dfs_weight < 1.0 - 1e-12) {
    throw StateInvalid(
        "open_gate_fidelity: input has support outside the DFS");
  }

  const double tau = evo.duration();
  const StateVector ideal = evo.evolve_state(input, tau);

  const Envelope env = spec.envelope;
  const LindbladResult result = evolve_scaled(
      h, noise, DensityState::from_pure(input), tau, tau / 5000.0,
      [env, tau](double t) { return envelope_value(env, t, tau); });

  // <ideal| rho |ideal>
  const StateVector rho_ideal = apply(result.state.rho, ideal);
  return inner_product(ideal, rho_ideal).real();
}

double bare_qubit_dephasing_fidelity(double rate, double pulse_area) {
  ComplexMatrix h = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, -0.5}});
  const double tau = pulse_area;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const StateVector plus(2, {cplx{inv_sqrt2, 0.0}, cplx{inv_sqrt2, 0.0}});
  const StateVector ideal = apply(matexp_hermitian(h, tau), plus);
  const NoiseSpec noise{rate, CollapseKind::Independent};
  const LindbladResult result = lindblad_evolve(
      h, noise, DensityState::from_pure(plus), tau, tau / 5000.0);
  const StateVector rho_ideal = apply(result.state.rho, ideal);
  return inner_product(ideal, rho_ideal).real();
}

std::vector<std::pair<double, double>> control_error_sweep(
    const ProtocolSpec& spec, const std::vector<double>& epsilon_grid) {
  const GateReport ideal = run_protocol(spec);
  std::vector<std::pair<double, double>> rows;
  rows.reserve(epsilon_grid.size());
  for (double eps : epsilon_grid) {
    ProtocolSpec perturbed = spec;
    perturbed.pulse_area = spec.pulse_area * (1.0 + eps);
    const GateReport report = run_protocol(perturbed);
    rows.emplace_back(eps, operator_fidelity(report.logical_unitary,
                                             ideal.logical_unitary));
  }
  return rows;
}

}  // namespace dfsim
