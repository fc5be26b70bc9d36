#pragma once
// The three encoded gate protocols: a logical Z rotation and a logical X
// rotation on one logical qubit (three physical qubits), and an entangling
// two-logical-qubit gate (six physical qubits). Each protocol evolves the
// full physical XXZ Hamiltonian under a scalar envelope of fixed area,
// extracts the logical gate, and reports total, dynamical and geometric
// phases for the cyclically evolving logical states.
//
// Phase conventions: a cyclic state picks up the factor exp(-i gamma) with
// gamma = 2 pi sin(angle) at pulse area 2 pi. Reported total phases are
// unwrapped to the branch nearest that value. The global phase of the
// extracted gate is normalized so the decoupled state's diagonal entry is
// real positive (|0>_L for the Z gate, |+>_L for the X gate, |01>_L for the
// two-qubit gate). Dynamical phases integrate the projected Hamiltonian
// with its identity offset removed, i.e. the matrix element on the
// decoupled state subtracted from the diagonal.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfsim/dfs.hpp"
#include "dfsim/evolution.hpp"
#include "dfsim/hamiltonian.hpp"
#include "dfsim/matrix.hpp"

namespace dfsim {

inline constexpr double kDefaultPulseArea = 2.0 * std::numbers::pi;
inline constexpr int kDefaultSegments = 2000;
// Leakage above this aborts a protocol run; the XXZ structure makes real
// leakage impossible, so crossing it means the build is broken.
inline constexpr double kLeakageAbortThreshold = 1e-9;
inline constexpr double kDegenerateGeometricTol = 1e-9;

enum class GateKind { Z, X, ZZ };
enum class LogicalAxis { Z, X };

struct ProtocolSpec {
  GateKind kind = GateKind::Z;
  double angle = 0.0;  // radians, in [-pi/2, pi/2]
  Envelope envelope = Envelope::Constant;
  double pulse_area = kDefaultPulseArea;
  int segments = kDefaultSegments;

  void validate() const;

  friend bool operator==(const ProtocolSpec&, const ProtocolSpec&) = default;
};

struct CyclicPhase {
  std::string state_label;
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
  // dynamical / geometric; NaN when |geometric| < kDegenerateGeometricTol.
  double ratio = std::numeric_limits<double>::quiet_NaN();

  friend bool operator==(const CyclicPhase&, const CyclicPhase&) = default;
};

struct PhaseReport {
  std::vector<CyclicPhase> states;
};

struct GateReport {
  ProtocolSpec spec;
  ComplexMatrix logical_unitary;  // 2x2 in {|0>_L,|1>_L} or 4x4 in
                                  // {|00>_L,|01>_L,|10>_L,|11>_L}
  PhaseReport phases;
  LeakageReport leakage;
  double target_fidelity = 0.0;
  std::optional<bool> entangling;  // set for the two-qubit gate
};

// Coupling table realizing the protocol at the given envelope strength.
CouplingConfig protocol_config(const ProtocolSpec& spec,
                               double envelope_value);

DfsEncoding protocol_encoding(GateKind kind);

// Full-space states whose accumulated phases certify geometric robustness:
// |1>_L for the Z gate, |->_L for the X gate, |00>_L and |11>_L for the
// two-qubit gate.
std::vector<StateVector> logical_basis_for_phase(const ProtocolSpec& spec);

GateReport run_protocol(const ProtocolSpec& spec);
// Same run with an explicit coupling table; lets callers study corrupted
// configurations.
GateReport run_protocol_with_config(const ProtocolSpec& spec,
                                    const CouplingConfig& config);

// -integral of <psi| U†(t) H_logical U(t) |psi> dt by composite Simpson
// quadrature over spec.segments panels. Throws StateNotCyclic when the
// state does not return to itself at the end of the pulse.
double dynamical_phase(const ProtocolSpec& spec, const StateVector& state);

// Throws DegenerateGeometricPhase when the geometric phase vanishes (i.e.
// sin(angle) = 0).
PhaseReport phase_report(const ProtocolSpec& spec);

// Closed-form logical gate for total phase gamma, in the computational
// logical basis.
ComplexMatrix ideal_logical_gate(GateKind kind, double gamma);

// Local invariants (g1, g2) of a two-qubit gate; a gate is a tensor product
// of one-qubit unitaries exactly when (g1, g2) = (1, 3).
std::pair<cplx, cplx> makhlin_invariants(const ComplexMatrix& gate);

// True iff the 4x4 unitary is not a tensor product of single-qubit gates up
// to global phase. Throws NotUnitary.
bool is_entangling(const ComplexMatrix& gate);

struct ComposedRotation {
  ComplexMatrix gate;                  // product, first rotation acts first
  std::vector<double> protocol_angles; // arcsin(gamma / 2 pi) per rotation
};

// Realizes each rotation angle gamma via its protocol (angle parameter
// arcsin(gamma / 2 pi)) and multiplies the resulting logical gates.
ComposedRotation compose_single_qubit(
    const std::vector<std::pair<LogicalAxis, double>>& rotations);

}  // namespace dfsim
