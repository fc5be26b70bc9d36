#pragma once
// Markovian master-equation evolution with sigma_z dephasing noise, either
// collective (one collapse operator, the total sigma_z) or independent (one
// sigma_z per qubit). Fixed-step classic Runge-Kutta; deterministic.

#include <utility>
#include <vector>

#include "dfsim/matrix.hpp"
#include "dfsim/protocol.hpp"

namespace dfsim {

struct DensityState {
  ComplexMatrix rho;

  static DensityState from_pure(const StateVector& psi);

  // Hermitian within 1e-10, unit trace within 1e-10, smallest eigenvalue
  // >= -1e-8. Throws StateInvalid.
  void validate() const;
};

enum class CollapseKind { Collective, Independent };

struct NoiseSpec {
  double rate = 0.0;  // in units of the unit-peak envelope energy
  CollapseKind collapse = CollapseKind::Collective;
};

struct LindbladDiagnostics {
  double max_trace_drift = 0.0;       // per-step, before renormalization
  double max_hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;        // of the final state
  std::size_t steps = 0;
};

struct LindbladResult {
  DensityState state;
  LindbladDiagnostics diagnostics;
};

// Integrates d rho/dt = -i[H, rho] + sum_j rate (L_j rho L_j - {L_j^2, rho}/2)
// from t = 0 to `duration` with fixed step `dt` (rounded to divide the
// duration). Requires dt <= duration and dt * ||h|| <= 0.05; throws
// StepTooLarge otherwise, StateInvalid when rho0 violates its invariants or
// the final state loses positivity.
LindbladResult lindblad_evolve(const ComplexMatrix& h, const NoiseSpec& noise,
                               const DensityState& rho0, double duration,
                               double dt);

// Single step of the same integrator.
LindbladResult lindblad_step(const ComplexMatrix& h, const NoiseSpec& noise,
                             const DensityState& rho0, double dt);

// Runs a gate protocol's Hamiltonian open-system and returns the state
// fidelity <psi_ideal| rho(tau) |psi_ideal> against the closed-system
// output. The input state must be normalized and supported on the
// protocol's DFS.
double open_gate_fidelity(const ProtocolSpec& spec, const NoiseSpec& noise,
                          const StateVector& input);

// Unencoded single qubit under H = sigma_z / 2 for one pulse, with
// independent dephasing at `rate`; fidelity against the closed-system
// output. Closed form: (1 + exp(-2 rate tau)) / 2 with tau = pulse_area.
double bare_qubit_dephasing_fidelity(double rate,
                                     double pulse_area = kDefaultPulseArea);

// For each epsilon, rescales the pulse area by (1 + epsilon), reruns the
// closed-system protocol and reports the logical gate's fidelity against
// the unperturbed gate.
std::vector<std::pair<double, double>> control_error_sweep(
    const ProtocolSpec& spec, const std::vector<double>& epsilon_grid);

}  // namespace dfsim
