// The three gate protocols: coupling maps, extracted gates, phases, the
// -2/3 ratio, entanglement classification and single-qubit universality.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dfsim/evolution.hpp"
#include "dfsim/protocol.hpp"

namespace {

using dfsim::ComplexMatrix;
using dfsim::cplx;
using dfsim::GateKind;
using dfsim::GateReport;
using dfsim::LogicalAxis;
using dfsim::ProtocolSpec;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

ProtocolSpec spec_for(GateKind kind, double angle) {
  ProtocolSpec spec;
  spec.kind = kind;
  spec.angle = angle;
  return spec;
}

}  // namespace

TEST_CASE("protocol_config reproduces the three coupling maps") {
  // Z gate at theta = 0: only the (1,3) flip-flop survives.
  const dfsim::CouplingConfig z0 =
      dfsim::protocol_config(spec_for(GateKind::Z, 0.0), 1.0);
  CHECK(z0.n_qubits == 3);
  CHECK(z0.jxy.size() == 1);
  CHECK(z0.jxy.at({1, 3}) == doctest::Approx(1.0));
  CHECK(z0.jzz.empty());
  CHECK(z0.jz_local.empty());

  // X gate at phi = 0.
  const dfsim::CouplingConfig x0 =
      dfsim::protocol_config(spec_for(GateKind::X, 0.0), 1.0);
  CHECK(x0.jxy.at({1, 2}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(x0.jxy.at({1, 3}) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(x0.jxy.count({2, 3}) == 0);
  CHECK(x0.jz_local.empty());

  // X gate at general phi carries the full chain of equalities.
  const double phi = 0.4;
  const dfsim::CouplingConfig x =
      dfsim::protocol_config(spec_for(GateKind::X, phi), 2.0);
  CHECK(x.jxy.at({1, 2}) == doctest::Approx(2.0 * std::cos(phi) / std::sqrt(2.0)));
  CHECK(x.jxy.at({1, 3}) == doctest::Approx(-2.0 * std::cos(phi) / std::sqrt(2.0)));
  CHECK(x.jxy.at({2, 3}) == doctest::Approx(-2.0 * std::sin(phi)));
  CHECK(x.jz_local.at(2) == doctest::Approx(-std::sin(phi)));
  CHECK(x.jz_local.at(3) == doctest::Approx(-std::sin(phi)));

  // Two-qubit gate at phi = pi/2: only the (3,6) zz coupling survives.
  const dfsim::CouplingConfig zz =
      dfsim::protocol_config(spec_for(GateKind::ZZ, kPi / 2.0), 1.0);
  CHECK(zz.n_qubits == 6);
  CHECK(zz.jxy.empty());
  CHECK(zz.jzz.size() == 1);
  CHECK(zz.jzz.at({3, 6}) == doctest::Approx(1.0));
}

TEST_CASE("pulse area accumulates exactly for both envelopes") {
  dfsim::CouplingConfig config =
      dfsim::protocol_config(spec_for(GateKind::Z, 0.3), 1.0);
  const ComplexMatrix h = dfsim::build_hamiltonian(config);
  for (dfsim::Envelope env :
       {dfsim::Envelope::Constant, dfsim::Envelope::SinSquared}) {
    const dfsim::SpectralEvolution evo(h, env, kTwoPi, 2000);
    CHECK(evo.area_at(evo.duration()) == doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK(evo.area_at(0.0) == 0.0);
  }
}

TEST_CASE("Z protocol at theta = pi/6 realizes the logical Z with total "
          "phase pi") {
  const GateReport report = dfsim::run_protocol(spec_for(GateKind::Z, kPi / 6.0));

  REQUIRE(report.phases.states.size() == 1);
  const dfsim::CyclicPhase& phase = report.phases.states.front();
  CHECK(phase.state_label == "1_L");
  CHECK(phase.total == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(phase.dynamical == doctest::Approx(-2.0 * kPi).epsilon(1e-9));
  CHECK(phase.geometric == doctest::Approx(3.0 * kPi).epsilon(1e-9));
  CHECK(phase.ratio == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));

  // diag(1, e^{-i pi}) = diag(1, -1)
  const ComplexMatrix expected =
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  CHECK(dfsim::max_abs_diff(report.logical_unitary, expected) < 1e-10);
  CHECK(report.target_fidelity >= 1.0 - 1e-10);
  CHECK(report.leakage.max_leakage <= 1e-12);
  CHECK(report.leakage.sample_times.size() == 201);
  CHECK_FALSE(report.entangling.has_value());
}

TEST_CASE("Z protocol at theta = 0 is the identity gate") {
  const GateReport report = dfsim::run_protocol(spec_for(GateKind::Z, 0.0));
  CHECK(dfsim::max_abs_diff(report.logical_unitary,
                            ComplexMatrix::identity(2)) < 1e-10);
  CHECK(report.phases.states.front().total == doctest::Approx(0.0));
  CHECK(std::isnan(report.phases.states.front().ratio));
  CHECK_THROWS_AS(dfsim::phase_report(spec_for(GateKind::Z, 0.0)),
                  dfsim::DegenerateGeometricPhase);
}

TEST_CASE("two-qubit protocol at phi = arcsin(1/4) gives gamma = pi/2 and an "
          "entangling gate") {
  const GateReport report =
      dfsim::run_protocol(spec_for(GateKind::ZZ, std::asin(0.25)));

  REQUIRE(report.phases.states.size() == 2);
  for (const dfsim::CyclicPhase& phase : report.phases.states) {
    CHECK(phase.total == doctest::Approx(kPi / 2.0).epsilon(1e-10));
  }
  // Both cyclic states pick up identical phases.
  CHECK(report.phases.states[0].total ==
        doctest::Approx(report.phases.states[1].total).epsilon(1e-10));
  CHECK(report.phases.states[0].dynamical ==
        doctest::Approx(report.phases.states[1].dynamical).epsilon(1e-10));

  const cplx e = std::polar(1.0, -kPi / 2.0);
  const ComplexMatrix expected = ComplexMatrix::from_rows({{e, 0.0, 0.0, 0.0},
                                                           {0.0, 1.0, 0.0, 0.0},
                                                           {0.0, 0.0, 1.0, 0.0},
                                                           {0.0, 0.0, 0.0, e}});
  CHECK(dfsim::max_abs_diff(report.logical_unitary, expected) < 1e-10);
  REQUIRE(report.entangling.has_value());
  CHECK(*report.entangling);
}

TEST_CASE("dynamical phases from quadrature match the closed forms") {
  const std::vector<dfsim::StateVector> z_states =
      dfsim::logical_basis_for_phase(spec_for(GateKind::Z, kPi / 6.0));
  REQUIRE(z_states.size() == 1);
  CHECK(dfsim::dynamical_phase(spec_for(GateKind::Z, kPi / 6.0), z_states[0]) ==
        doctest::Approx(-2.0 * kPi).epsilon(1e-9));
  CHECK(dfsim::dynamical_phase(spec_for(GateKind::Z, 0.0), z_states[0]) ==
        doctest::Approx(0.0));

  const std::vector<dfsim::StateVector> zz_states =
      dfsim::logical_basis_for_phase(spec_for(GateKind::ZZ, kPi / 6.0));
  REQUIRE(zz_states.size() == 2);
  CHECK(dfsim::dynamical_phase(spec_for(GateKind::ZZ, kPi / 6.0),
                               zz_states[1]) ==
        doctest::Approx(-2.0 * kPi).epsilon(1e-9));

  // The X protocol examines |->_L = (|010> - |001>)/sqrt(2).
  const std::vector<dfsim::StateVector> x_states =
      dfsim::logical_basis_for_phase(spec_for(GateKind::X, kPi / 6.0));
  REQUIRE(x_states.size() == 1);
  CHECK(std::abs(x_states[0].amplitudes[0b010] - cplx{1.0 / std::sqrt(2.0), 0.0}) <
        1e-15);
  CHECK(std::abs(x_states[0].amplitudes[0b001] + cplx{1.0 / std::sqrt(2.0), 0.0}) <
        1e-15);
  CHECK(dfsim::dynamical_phase(spec_for(GateKind::X, kPi / 6.0), x_states[0]) ==
        doctest::Approx(-2.0 * kPi).epsilon(1e-9));
}

TEST_CASE("dynamical_phase input contract") {
  const ProtocolSpec spec = spec_for(GateKind::Z, kPi / 6.0);

  // (|0>_L + |1>_L)/sqrt(2) does not return to itself at pulse area 2 pi.
  dfsim::StateVector superposition(8);
  superposition.amplitudes[0b010] = cplx{1.0 / std::sqrt(2.0), 0.0};
  superposition.amplitudes[0b001] = cplx{1.0 / std::sqrt(2.0), 0.0};
  CHECK_THROWS_AS(dfsim::dynamical_phase(spec, superposition),
                  dfsim::StateNotCyclic);

  dfsim::StateVector outside(8);
  outside.amplitudes[0b000] = cplx{1.0, 0.0};
  CHECK_THROWS_AS(dfsim::dynamical_phase(spec, outside), dfsim::StateInvalid);

  dfsim::StateVector unnormalized(8);
  unnormalized.amplitudes[0b001] = cplx{0.5, 0.0};
  CHECK_THROWS_AS(dfsim::dynamical_phase(spec, unnormalized),
                  dfsim::StateInvalid);
}

TEST_CASE("phase reports across protocols and signs") {
  const dfsim::PhaseReport x_report =
      dfsim::phase_report(spec_for(GateKind::X, kPi / 6.0));
  CHECK(x_report.states.front().total == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(x_report.states.front().dynamical ==
        doctest::Approx(-2.0 * kPi).epsilon(1e-9));
  CHECK(x_report.states.front().geometric ==
        doctest::Approx(3.0 * kPi).epsilon(1e-9));
  CHECK(x_report.states.front().ratio ==
        doctest::Approx(-2.0 / 3.0).epsilon(1e-9));

  // Odd symmetry in the angle.
  const dfsim::PhaseReport zz_report =
      dfsim::phase_report(spec_for(GateKind::ZZ, -kPi / 6.0));
  for (const dfsim::CyclicPhase& phase : zz_report.states) {
    CHECK(phase.total == doctest::Approx(-kPi).epsilon(1e-10));
    CHECK(phase.dynamical == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    CHECK(phase.geometric == doctest::Approx(-3.0 * kPi).epsilon(1e-9));
    CHECK(phase.ratio == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("gate formulas, ratio constancy and leakage over an angle grid") {
  const double angles[] = {-kPi / 2.0, -1.1, -0.6, -0.2, 0.35, 0.9, kPi / 2.0};
  for (GateKind kind : {GateKind::Z, GateKind::X, GateKind::ZZ}) {
    for (double angle : angles) {
      const GateReport report = dfsim::run_protocol(spec_for(kind, angle));
      const double gamma = kTwoPi * std::sin(angle);

      CHECK(report.target_fidelity >= 1.0 - 1e-10);
      CHECK(report.leakage.max_leakage <= 1e-12);
      for (const dfsim::CyclicPhase& phase : report.phases.states) {
        CHECK(std::abs(phase.total - gamma) <= 1e-9);
        CHECK(std::abs(phase.dynamical + 2.0 * gamma) <= 1e-8);
        if (std::abs(std::sin(angle)) >= 0.05) {
          CHECK(std::abs(phase.ratio + 2.0 / 3.0) <= 1e-8);
        }
      }
      CHECK(dfsim::max_abs_diff(report.logical_unitary,
                                dfsim::ideal_logical_gate(kind, gamma)) <
            1e-9);
    }
  }
}

TEST_CASE("decoupled states stay stationary at every sampled time") {
  struct Case {
    GateKind kind;
    double angle;
  };
  for (const Case& c : {Case{GateKind::Z, 0.7}, Case{GateKind::X, -0.4},
                        Case{GateKind::ZZ, 1.1}}) {
    const ProtocolSpec spec = spec_for(c.kind, c.angle);
    const dfsim::CouplingConfig config = dfsim::protocol_config(spec, 1.0);
    const dfsim::DfsEncoding enc = dfsim::protocol_encoding(c.kind);
    const dfsim::SpectralEvolution evo(dfsim::build_hamiltonian(config),
                                       spec.envelope, spec.pulse_area,
                                       spec.segments);
    const dfsim::ProjectedEvolution proj(evo, enc);

    std::vector<std::vector<cplx>> decoupled;
    if (c.kind == GateKind::Z) {
      std::vector<cplx> v(3);
      v[enc.index_of_label("0_L")] = cplx{1.0, 0.0};
      decoupled.push_back(v);
    } else if (c.kind == GateKind::X) {
      std::vector<cplx> v(3);
      v[enc.index_of_label("0_L")] = cplx{1.0 / std::sqrt(2.0), 0.0};
      v[enc.index_of_label("1_L")] = cplx{1.0 / std::sqrt(2.0), 0.0};
      decoupled.push_back(v);
    } else {
      for (const char* label : {"01_L", "10_L"}) {
        std::vector<cplx> v(6);
        v[enc.index_of_label(label)] = cplx{1.0, 0.0};
        decoupled.push_back(v);
      }
    }

    for (int s = 0; s <= 200; ++s) {
      const double t = evo.duration() * s / 200.0;
      const ComplexMatrix w = proj.block_at(t);
      for (const std::vector<cplx>& v : decoupled) {
        cplx amp{0.0, 0.0};
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < v.size(); ++j) {
            amp += std::conj(v[i]) * w(i, j) * v[j];
          }
        }
        CHECK(std::abs(amp) >= 1.0 - 1e-10);
      }
    }
  }
}

TEST_CASE("constant and sin^2 envelopes of equal area give the same gate") {
  for (GateKind kind : {GateKind::Z, GateKind::X, GateKind::ZZ}) {
    ProtocolSpec constant = spec_for(kind, 0.5);
    ProtocolSpec shaped = constant;
    shaped.envelope = dfsim::Envelope::SinSquared;
    const GateReport a = dfsim::run_protocol(constant);
    const GateReport b = dfsim::run_protocol(shaped);
    CHECK(dfsim::operator_fidelity(a.logical_unitary, b.logical_unitary) >=
          1.0 - 1e-10);
  }
}

TEST_CASE("realized Z and X rotations do not commute") {
  const GateReport z = dfsim::run_protocol(spec_for(GateKind::Z, std::asin(0.25)));
  const GateReport x = dfsim::run_protocol(spec_for(GateKind::X, std::asin(0.25)));
  const ComplexMatrix zx = dfsim::matmul(z.logical_unitary, x.logical_unitary);
  const ComplexMatrix xz = dfsim::matmul(x.logical_unitary, z.logical_unitary);
  CHECK(dfsim::max_abs(zx - xz) > 0.5);
}

TEST_CASE("makhlin invariants classify standard gates") {
  // Identity: the local reference class (1, 3).
  auto [g1_id, g2_id] = dfsim::makhlin_invariants(ComplexMatrix::identity(4));
  CHECK(std::abs(g1_id - cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(g2_id - cplx{3.0, 0.0}) < 1e-12);

  // CNOT: (0, 1).
  const ComplexMatrix cnot = ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                                       {0.0, 1.0, 0.0, 0.0},
                                                       {0.0, 0.0, 0.0, 1.0},
                                                       {0.0, 0.0, 1.0, 0.0}});
  auto [g1_cnot, g2_cnot] = dfsim::makhlin_invariants(cnot);
  CHECK(std::abs(g1_cnot) < 1e-12);
  CHECK(std::abs(g2_cnot - cplx{1.0, 0.0}) < 1e-12);

  // SWAP: (-1, -3); not a tensor product.
  const ComplexMatrix swap = ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                                       {0.0, 0.0, 1.0, 0.0},
                                                       {0.0, 1.0, 0.0, 0.0},
                                                       {0.0, 0.0, 0.0, 1.0}});
  auto [g1_swap, g2_swap] = dfsim::makhlin_invariants(swap);
  CHECK(std::abs(g1_swap + cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(g2_swap + cplx{3.0, 0.0}) < 1e-12);
}

TEST_CASE("is_entangling on the controlled-phase family") {
  auto phase_gate = [](double gamma) {
    const cplx e = std::polar(1.0, -gamma);
    return ComplexMatrix::from_rows({{e, 0.0, 0.0, 0.0},
                                     {0.0, 1.0, 0.0, 0.0},
                                     {0.0, 0.0, 1.0, 0.0},
                                     {0.0, 0.0, 0.0, e}});
  };
  CHECK_FALSE(dfsim::is_entangling(phase_gate(0.0)));
  CHECK_FALSE(dfsim::is_entangling(phase_gate(kPi)));
  CHECK_FALSE(dfsim::is_entangling(phase_gate(-kPi)));
  CHECK(dfsim::is_entangling(phase_gate(kPi / 2.0)));
  CHECK(dfsim::is_entangling(phase_gate(0.3)));

  ComplexMatrix not_unitary(4, 4);
  not_unitary(0, 0) = cplx{2.0, 0.0};
  CHECK_THROWS_AS(dfsim::is_entangling(not_unitary), dfsim::NotUnitary);
}

TEST_CASE("compose_single_qubit reaches Z, the identity and a Hadamard") {
  const dfsim::ComposedRotation empty = dfsim::compose_single_qubit({});
  CHECK(dfsim::max_abs_diff(empty.gate, ComplexMatrix::identity(2)) == 0.0);

  const dfsim::ComposedRotation z =
      dfsim::compose_single_qubit({{LogicalAxis::Z, kPi}});
  const ComplexMatrix z_l =
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  CHECK(dfsim::operator_fidelity(z.gate, z_l) >= 1.0 - 1e-10);
  CHECK(z.protocol_angles.size() == 1);
  CHECK(z.protocol_angles[0] == doctest::Approx(std::asin(0.5)));

  // Closed-form oracle for the triple product: with each realized rotation
  // equal to diag(1, e^{-i gamma}) in its own eigenbasis, the gamma = pi/2
  // sequence Z X Z multiplies out to the Hadamard up to a global phase.
  const dfsim::ComposedRotation h = dfsim::compose_single_qubit(
      {{LogicalAxis::Z, kPi / 2.0},
       {LogicalAxis::X, kPi / 2.0},
       {LogicalAxis::Z, kPi / 2.0}});

  const cplx e = std::polar(1.0, -kPi / 2.0);
  const ComplexMatrix uz = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, e}});
  const ComplexMatrix ux = ComplexMatrix::from_rows(
      {{0.5 * (1.0 + e), 0.5 * (1.0 - e)}, {0.5 * (1.0 - e), 0.5 * (1.0 + e)}});
  const ComplexMatrix oracle = dfsim::matmul(uz, dfsim::matmul(ux, uz));
  CHECK(dfsim::max_abs_diff(h.gate, oracle) < 1e-10);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexMatrix hadamard = ComplexMatrix::from_rows(
      {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}});
  CHECK(dfsim::operator_fidelity(h.gate, hadamard) >= 1.0 - 1e-9);

  CHECK_THROWS_AS(dfsim::compose_single_qubit({{LogicalAxis::Z, 7.0}}),
                  std::invalid_argument);
}

TEST_CASE("a corrupted local-field sign breaks the phase relations") {
  const ProtocolSpec spec = spec_for(GateKind::Z, 0.9);
  dfsim::CouplingConfig corrupted = dfsim::protocol_config(spec, 1.0);
  corrupted.jz_local[3] = -corrupted.jz_local[3];

  const GateReport report = dfsim::run_protocol_with_config(spec, corrupted);
  const double gamma = kTwoPi * std::sin(0.9);
  const dfsim::CyclicPhase& phase = report.phases.states.front();
  CHECK(std::abs(phase.total - gamma) > 0.1);
  CHECK(std::abs(phase.dynamical + 2.0 * gamma) > 0.1);
  CHECK(std::abs(phase.ratio + 2.0 / 3.0) > 0.1);
  CHECK(report.target_fidelity < 1.0 - 1e-3);
}

TEST_CASE("spec validation") {
  ProtocolSpec bad = spec_for(GateKind::Z, 2.0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec_for(GateKind::Z, 0.0);
  bad.pulse_area = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec_for(GateKind::Z, 0.0);
  bad.segments = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
