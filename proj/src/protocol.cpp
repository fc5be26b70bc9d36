#include "dfsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dfsim/hermitian_eig.hpp"

namespace dfsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Couplings smaller than this (relative to the envelope) are exact zeros of
// the parameter maps evaluated in floating point, e.g. cos(pi/2).
constexpr double kCouplingZeroTol = 1e-15;
constexpr int kLeakageSamples = 201;
constexpr double kCyclicTol = 1e-9;

double unwrap_toward(double principal, double target) {
  return principal + kTwoPi * std::round((target - principal) / kTwoPi);
}

void set_if_nonzero(std::map<std::pair<int, int>, double>& table, int k,
                    int l, double value, double scale) {
  if (std::abs(value) > kCouplingZeroTol * std::abs(scale)) {
    table[{k, l}] = value;
  }
}

void set_if_nonzero(std::map<int, double>& table, int site, double value,
                    double scale) {
  if (std::abs(value) > kCouplingZeroTol * std::abs(scale)) {
    table[site] = value;
  }
}

cplx quadratic_form(const std::vector<cplx>& v, const ComplexMatrix& m) {
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == cplx{0.0, 0.0}) continue;
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < v.size(); ++j) row += m(i, j) * v[j];
    sum += std::conj(v[i]) * row;
  }
  return sum;
}

// Per-protocol data reused by every extraction step. ProjectedEvolution
// points into the evolution member, so the context is pinned in place.
struct ProtocolContext {
  ProtocolSpec spec;
  CouplingConfig config;
  DfsEncoding encoding;
  SpectralEvolution evo;
  ProjectedEvolution proj;
  ComplexMatrix h_logical;  // projected unit-envelope H, identity offset removed
  std::vector<cplx> decoupled;
  std::vector<std::vector<cplx>> cyclic;
  std::vector<std::string> cyclic_labels;
  std::vector<std::size_t> computational;

  ProtocolContext(const ProtocolSpec& s, const CouplingConfig& c)
      : spec(s),
        config(c),
        encoding(protocol_encoding(s.kind)),
        evo(build_hamiltonian(c), s.envelope, s.pulse_area, s.segments),
        proj(evo, encoding) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t d = encoding.dim();
    auto unit = [&](const char* label) {
      std::vector<cplx> v(d, cplx{0.0, 0.0});
      v[encoding.index_of_label(label)] = cplx{1.0, 0.0};
      return v;
    };
    switch (spec.kind) {
      case GateKind::Z:
        decoupled = unit("0_L");
        cyclic = {unit("1_L")};
        cyclic_labels = {"1_L"};
        break;
      case GateKind::X: {
        std::vector<cplx> plus(d), minus(d);
        const std::size_t i0 = encoding.index_of_label("0_L");
        const std::size_t i1 = encoding.index_of_label("1_L");
        plus[i0] = plus[i1] = cplx{inv_sqrt2, 0.0};
        minus[i0] = cplx{inv_sqrt2, 0.0};
        minus[i1] = cplx{-inv_sqrt2, 0.0};
        decoupled = plus;
        cyclic = {minus};
        cyclic_labels = {"-_L"};
        break;
      }
      case GateKind::ZZ:
        decoupled = unit("01_L");
        cyclic = {unit("00_L"), unit("11_L")};
        cyclic_labels = {"00_L", "11_L"};
        break;
    }
    if (spec.kind == GateKind::ZZ) {
      computational = {encoding.index_of_label("00_L"),
                       encoding.index_of_label("01_L"),
                       encoding.index_of_label("10_L"),
                       encoding.index_of_label("11_L")};
    } else {
      computational = {encoding.index_of_label("0_L"),
                       encoding.index_of_label("1_L")};
    }

    h_logical = project_to_dfs(evo.h_unit(), encoding);
    const double offset = quadratic_form(decoupled, h_logical).real();
    h_logical -= cplx{offset, 0.0} * ComplexMatrix::identity(d);
  }

  ProtocolContext(const ProtocolContext&) = delete;
  ProtocolContext& operator=(const ProtocolContext&) = delete;

  StateVector full_state(const std::vector<cplx>& coeffs) const {
    StateVector psi(encoding.full_dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      psi.amplitudes[encoding.product_state_index(i)] = coeffs[i];
    }
    return psi;
  }
};

// Composite Simpson quadrature of
//   -integral J(t) <psi(t)| H_logical |psi(t)> dt
// over the pulse, where |psi(t)> are the subspace coefficients of the
// evolving state and H_logical carries the unit envelope.
double simpson_dynamical(const ProtocolContext& ctx,
                         const std::vector<cplx>& c0) {
  const double tau = ctx.evo.duration();
  int panels = ctx.spec.segments;
  if (panels % 2 != 0) ++panels;

  const StateVector psi0 = ctx.full_state(c0);
  const std::vector<cplx> y = ctx.evo.to_eigenbasis(psi0);

  // Cyclicity of the state over the pulse.
  {
    const std::vector<cplx> phases = ctx.evo.phases_at(tau);
    cplx amp{0.0, 0.0};
    for (std::size_t k = 0; k < y.size(); ++k) {
      amp += std::conj(y[k]) * phases[k] * y[k];
    }
    if (std::abs(amp) < 1.0 - kCyclicTol) {
      throw StateNotCyclic("dynamical_phase: |<psi|U(tau)|psi>| = " +
                           std::to_string(std::abs(amp)));
    }
  }

  const double h = tau / panels;
  auto integrand = [&](double t) {
    const std::vector<cplx> c = ctx.proj.coefficients_at(t, y);
    const double value = quadratic_form(c, ctx.h_logical).real();
    return envelope_value(ctx.spec.envelope, t, tau) * value;
  };

  double sum = integrand(0.0) + integrand(tau);
  for (int i = 1; i < panels; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
  }
  return -(h / 3.0) * sum;
}

GateReport run_context(const ProtocolContext& ctx) {
  GateReport report;
  report.spec = ctx.spec;
  const double tau = ctx.evo.duration();

  report.leakage.sample_times.reserve(kLeakageSamples);
  for (int s = 0; s < kLeakageSamples; ++s) {
    const double t = tau * static_cast<double>(s) / (kLeakageSamples - 1);
    report.leakage.sample_times.push_back(t);
    report.leakage.max_leakage =
        std::max(report.leakage.max_leakage,
                 leakage_norm(ctx.proj.embedded_columns_at(t), ctx.encoding));
  }
  if (report.leakage.max_leakage > kLeakageAbortThreshold) {
    throw LeakageExceeded("run_protocol: leakage " +
                          std::to_string(report.leakage.max_leakage) +
                          " exceeds " + std::to_string(kLeakageAbortThreshold));
  }

  ComplexMatrix w = ctx.proj.block_at(tau);

  // Normalize the global phase so the decoupled state's entry is 1.
  const cplx z = quadratic_form(ctx.decoupled, w);
  if (std::abs(z) < 1e-12) {
    throw SimError("run_protocol: decoupled state lost its amplitude");
  }
  w *= std::conj(z) / std::abs(z);

  const double target_gamma = kTwoPi * std::sin(ctx.spec.angle);
  for (std::size_t i = 0; i < ctx.cyclic.size(); ++i) {
    const cplx amp = quadratic_form(ctx.cyclic[i], w);
    CyclicPhase phase;
    phase.state_label = ctx.cyclic_labels[i];
    if (std::abs(amp) >= 1.0 - kCyclicTol) {
      phase.total = unwrap_toward(-std::arg(amp), target_gamma);
      phase.dynamical = simpson_dynamical(ctx, ctx.cyclic[i]);
      phase.geometric = phase.total - phase.dynamical;
      if (std::abs(phase.geometric) >= kDegenerateGeometricTol) {
        phase.ratio = phase.dynamical / phase.geometric;
      }
    } else {
      // A perturbed pulse area breaks cyclicity; the accumulated phases
      // are undefined then and stay NaN.
      const double nan = std::numeric_limits<double>::quiet_NaN();
      phase.total = phase.dynamical = phase.geometric = nan;
    }
    report.phases.states.push_back(std::move(phase));
  }

  const std::size_t dc = ctx.computational.size();
  ComplexMatrix logical(dc, dc);
  for (std::size_t i = 0; i < dc; ++i) {
    for (std::size_t j = 0; j < dc; ++j) {
      logical(i, j) = w(ctx.computational[i], ctx.computational[j]);
    }
  }
  report.logical_unitary = logical;
  report.target_fidelity = operator_fidelity(
      logical, ideal_logical_gate(ctx.spec.kind, target_gamma));
  if (ctx.spec.kind == GateKind::ZZ) {
    report.entangling = is_entangling(logical);
  }
  return report;
}

ComplexMatrix magic_basis() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  ComplexMatrix q = ComplexMatrix::from_rows({{1.0, 0.0, 0.0, i},
                                              {0.0, i, 1.0, 0.0},
                                              {0.0, i, -1.0, 0.0},
                                              {1.0, 0.0, 0.0, -i}});
  q *= cplx{inv_sqrt2, 0.0};
  return q;
}

cplx det4(ComplexMatrix a) {
  cplx det{1.0, 0.0};
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) == 0.0) return cplx{0.0, 0.0};
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

}  // namespace

void ProtocolSpec::validate() const {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (!(std::abs(angle) <= kHalfPi + 1e-12)) {
    throw std::invalid_argument("ProtocolSpec: angle must lie in [-pi/2, pi/2]");
  }
  if (!(pulse_area > 0.0)) {
    throw std::invalid_argument("ProtocolSpec: pulse_area must be positive");
  }
  if (segments < 2) {
    throw std::invalid_argument("ProtocolSpec: segments must be at least 2");
  }
}

CouplingConfig protocol_config(const ProtocolSpec& spec,
                               double envelope_value) {
  spec.validate();
  const double j = envelope_value;
  const double angle = spec.angle;
  CouplingConfig config;
  switch (spec.kind) {
    case GateKind::Z:
      config.n_qubits = 3;
      set_if_nonzero(config.jxy, 1, 3, j * std::cos(angle), j);
      set_if_nonzero(config.jz_local, 3, -j * std::sin(angle), j);
      break;
    case GateKind::X: {
      config.n_qubits = 3;
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      set_if_nonzero(config.jxy, 1, 2, j * std::cos(angle) * inv_sqrt2, j);
      set_if_nonzero(config.jxy, 1, 3, -j * std::cos(angle) * inv_sqrt2, j);
      set_if_nonzero(config.jxy, 2, 3, -j * std::sin(angle), j);
      set_if_nonzero(config.jz_local, 2, -j * std::sin(angle) / 2.0, j);
      set_if_nonzero(config.jz_local, 3, -j * std::sin(angle) / 2.0, j);
      break;
    }
    case GateKind::ZZ:
      config.n_qubits = 6;
      set_if_nonzero(config.jxy, 3, 5, j * std::cos(angle), j);
      set_if_nonzero(config.jzz, 3, 6, j * std::sin(angle), j);
      break;
  }
  return config;
}

DfsEncoding protocol_encoding(GateKind kind) {
  return kind == GateKind::ZZ ? standard_two_qubit_encoding()
                              : standard_single_qubit_encoding();
}

std::vector<StateVector> logical_basis_for_phase(const ProtocolSpec& spec) {
  const DfsEncoding enc = protocol_encoding(spec.kind);
  auto basis_of = [&](const char* label) {
    return enc.basis_vector(enc.index_of_label(label));
  };
  switch (spec.kind) {
    case GateKind::Z:
      return {basis_of("1_L")};
    case GateKind::X: {
      StateVector zero = basis_of("0_L");
      StateVector one = basis_of("1_L");
      StateVector minus(zero.dim);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < minus.dim; ++i) {
        minus.amplitudes[i] =
            inv_sqrt2 * (zero.amplitudes[i] - one.amplitudes[i]);
      }
      return {minus};
    }
    case GateKind::ZZ:
      return {basis_of("00_L"), basis_of("11_L")};
  }
  throw SimError("logical_basis_for_phase: unknown gate kind");
}

GateReport run_protocol(const ProtocolSpec& spec) {
  spec.validate();
  return run_protocol_with_config(spec, protocol_config(spec, 1.0));
}

GateReport run_protocol_with_config(const ProtocolSpec& spec,
                                    const CouplingConfig& config) {
  spec.validate();
  const ProtocolContext ctx(spec, config);
  return run_context(ctx);
}

double dynamical_phase(const ProtocolSpec& spec, const StateVector& state) {
  spec.validate();
  const ProtocolContext ctx(spec, protocol_config(spec, 1.0));
  if (state.dim != ctx.encoding.full_dim()) {
    throw DimensionMismatch("dynamical_phase: state dimension mismatch");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw StateInvalid("dynamical_phase: state is not normalized");
  }
  std::vector<cplx> c0(ctx.encoding.dim());
  double weight = 0.0;
  for (std::size_t i = 0; i < c0.size(); ++i) {
    c0[i] = state.amplitudes[ctx.encoding.product_state_index(i)];
    weight += std::norm(c0[i]);
  }
  if (weight < 1.0 - 1e-12) {
    throw StateInvalid("dynamical_phase: state has support outside the DFS");
  }
  return simpson_dynamical(ctx, c0);
}

PhaseReport phase_report(const ProtocolSpec& spec) {
  const GateReport report = run_protocol(spec);
  for (const CyclicPhase& phase : report.phases.states) {
    if (std::isnan(phase.total)) {
      throw StateNotCyclic("phase_report: state " + phase.state_label +
                           " is not cyclic at this pulse area");
    }
    if (std::isnan(phase.ratio)) {
      throw DegenerateGeometricPhase(
          "phase_report: geometric phase vanishes for state " +
          phase.state_label);
    }
  }
  return report.phases;
}

ComplexMatrix ideal_logical_gate(GateKind kind, double gamma) {
  const cplx e = std::polar(1.0, -gamma);
  switch (kind) {
    case GateKind::Z:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, e}});
    case GateKind::X: {
      const cplx p = 0.5 * (1.0 + e);
      const cplx m = 0.5 * (1.0 - e);
      return ComplexMatrix::from_rows({{p, m}, {m, p}});
    }
    case GateKind::ZZ:
      return ComplexMatrix::from_rows({{e, 0.0, 0.0, 0.0},
                                       {0.0, 1.0, 0.0, 0.0},
                                       {0.0, 0.0, 1.0, 0.0},
                                       {0.0, 0.0, 0.0, e}});
  }
  throw SimError("ideal_logical_gate: unknown gate kind");
}

std::pair<cplx, cplx> makhlin_invariants(const ComplexMatrix& gate) {
  if (gate.rows() != 4 || gate.cols() != 4) {
    throw DimensionMismatch("makhlin_invariants: need a 4x4 gate");
  }
  static const ComplexMatrix q = magic_basis();
  static const ComplexMatrix q_dag = dagger(magic_basis());
  const ComplexMatrix m_basis = matmul(q_dag, matmul(gate, q));
  const ComplexMatrix m = matmul(transpose(m_basis), m_basis);
  const cplx tr_m = trace(m);
  const cplx tr_m2 = trace(matmul(m, m));
  const cplx det_u = det4(gate);
  const cplx g1 = tr_m * tr_m / (16.0 * det_u);
  const cplx g2 = (tr_m * tr_m - tr_m2) / (4.0 * det_u);
  return {g1, g2};
}

bool is_entangling(const ComplexMatrix& gate) {
  if (gate.rows() != 4 || gate.cols() != 4 || !is_unitary(gate, 1e-10)) {
    throw NotUnitary("is_entangling: input is not a 4x4 unitary");
  }
  constexpr double kLocalTol = 1e-8;
  const auto [g1, g2] = makhlin_invariants(gate);
  const bool local = std::abs(g1 - cplx{1.0, 0.0}) <= kLocalTol &&
                     std::abs(g2 - cplx{3.0, 0.0}) <= kLocalTol;
  return !local;
}

ComposedRotation compose_single_qubit(
    const std::vector<std::pair<LogicalAxis, double>>& rotations) {
  ComposedRotation out;
  out.gate = ComplexMatrix::identity(2);
  for (const auto& [axis, gamma] : rotations) {
    if (std::abs(gamma) > kTwoPi + 1e-12) {
      throw std::invalid_argument(
          "compose_single_qubit: rotation angle outside [-2pi, 2pi]");
    }
    ProtocolSpec spec;
    spec.kind = axis == LogicalAxis::Z ? GateKind::Z : GateKind::X;
    spec.angle = std::asin(std::clamp(gamma / kTwoPi, -1.0, 1.0));
    out.protocol_angles.push_back(spec.angle);
    const GateReport report = run_protocol(spec);
    out.gate = matmul(report.logical_unitary, out.gate);
  }
  return out;
}

}  // namespace dfsim
