#pragma once
// XXZ Hamiltonian assembly on up to 6 qubits, plus the collective dephasing
// system operator.
//
// Conventions used throughout the library:
//   * qubits are numbered 1..n; qubit 1 is the leftmost (most significant)
//     tensor factor, so basis index bits read left to right as qubits 1..n
//   * sigma_z |0> = +|0>

#include <map>
#include <utility>

#include "dfsim/matrix.hpp"

namespace dfsim {

enum class PauliAxis { X, Y, Z };

// Sparse coupling table; absent keys mean strength zero. Pair keys are
// (k, l) with 1 <= k < l <= n_qubits, local keys are 1 <= m <= n_qubits.
struct CouplingConfig {
  int n_qubits = 0;
  std::map<std::pair<int, int>, double> jxy;
  std::map<std::pair<int, int>, double> jzz;
  std::map<int, double> jz_local;

  // Throws SiteOutOfRange on bad keys or qubit count outside 1..6.
  void validate() const;

  CouplingConfig& operator+=(const CouplingConfig& other);

  friend bool operator==(const CouplingConfig&, const CouplingConfig&) =
      default;
};

ComplexMatrix pauli_matrix(PauliAxis axis);

// I ⊗ ... ⊗ sigma_axis ⊗ ... ⊗ I with the Pauli at position `site`.
ComplexMatrix pauli_on_site(PauliAxis axis, int site, int n_qubits);

// (sigma_x_k sigma_x_l + sigma_y_k sigma_y_l) / 2: the excitation flip-flop
// between sites k and l.
ComplexMatrix build_rxy(int k, int l, int n_qubits);

// sigma_z_k sigma_z_l.
ComplexMatrix build_rz(int k, int l, int n_qubits);

// Sum of jxy * Rxy + jzz * Rz pair terms and jz_local * sigma_z site terms.
ComplexMatrix build_hamiltonian(const CouplingConfig& config);

// Sum over all sites of sigma_z; the system factor of collective dephasing.
ComplexMatrix collective_dephasing_operator(int n_qubits);

}  // namespace dfsim
