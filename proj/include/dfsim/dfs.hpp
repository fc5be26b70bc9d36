#pragma once
// Decoherence-free subspace encodings: logical-basis bookkeeping, operator
// projection, and leakage measurement.

#include <functional>
#include <string>
#include <vector>

#include "dfsim/matrix.hpp"

namespace dfsim {

struct DfsBasisState {
  std::string label;  // e.g. "0_L", "a", "00_L"
  std::string bits;   // product state, qubit 1 first: "010"

  friend bool operator==(const DfsBasisState&, const DfsBasisState&) = default;
};

// An ordered list of computational-basis product states spanning a candidate
// DFS. The ordering is part of the contract: evolution matrices are reported
// in this basis, ancillary states first.
struct DfsEncoding {
  int n_qubits = 0;
  std::vector<DfsBasisState> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t full_dim() const { return std::size_t{1} << n_qubits; }

  // Basis-state index in the full Hilbert space (qubit 1 = most significant
  // bit).
  std::size_t product_state_index(std::size_t i) const;
  std::size_t index_of_label(const std::string& label) const;
  StateVector basis_vector(std::size_t i) const;

  // Structural checks only (label/state uniqueness, bit widths); whether the
  // span is actually decoherence-free is the job of verify_dfs.
  void validate() const;

  friend bool operator==(const DfsEncoding&, const DfsEncoding&) = default;
};

// 3 qubits, basis (|a>, |1>_L, |0>_L) = (|100>, |001>, |010>).
DfsEncoding standard_single_qubit_encoding();

// 6 qubits, basis (|a1>, |a2>, |00>_L, |01>_L, |10>_L, |11>_L).
DfsEncoding standard_two_qubit_encoding();

// Checks every basis state is an eigenstate of the collective dephasing
// operator with one common eigenvalue and returns that eigenvalue; a common
// eigenvalue means collective noise acts as a global phase on the span.
// Throws NotDecoherenceFree otherwise.
double verify_dfs(const DfsEncoding& encoding);

// d x d matrix of elements <basis_i| op |basis_j> in encoding order.
ComplexMatrix project_to_dfs(const ComplexMatrix& op_full,
                             const DfsEncoding& encoding);

struct LeakageReport {
  double max_leakage = 0.0;
  std::vector<double> sample_times;
};

// Max over uniformly sampled t in [0, tau] of ||(I-P) U(t) P||_2, where P
// projects onto the encoded subspace.
LeakageReport leakage(const std::function<ComplexMatrix(double)>& u_of_t,
                      double tau, const DfsEncoding& encoding,
                      int sample_count);

// Shared metric: ||(I-P) U P||_2 given the embedded columns U B (full
// dimension x d). Computed directly from the out-of-subspace block, so it
// stays meaningful down to round-off scale.
double leakage_norm(const ComplexMatrix& u_times_basis,
                    const DfsEncoding& encoding);

}  // namespace dfsim
