#include "dfsim/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dfsim/hamiltonian.hpp"
#include "dfsim/hermitian_eig.hpp"

namespace dfsim {

std::size_t DfsEncoding::product_state_index(std::size_t i) const {
  const std::string& bits = basis.at(i).bits;
  std::size_t index = 0;
  for (char c : bits) index = (index << 1) | (c == '1' ? 1 : 0);
  return index;
}

std::size_t DfsEncoding::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].label == label) return i;
  }
  throw SimError("DfsEncoding: no basis state labelled '" + label + "'");
}

StateVector DfsEncoding::basis_vector(std::size_t i) const {
  return StateVector::basis_state(full_dim(), product_state_index(i));
}

void DfsEncoding::validate() const {
  if (n_qubits < 1) throw StateInvalid("DfsEncoding: n_qubits < 1");
  if (basis.empty()) throw StateInvalid("DfsEncoding: empty basis");
  std::set<std::string> labels;
  std::set<std::string> states;
  for (const DfsBasisState& b : basis) {
    if (b.bits.size() != static_cast<std::size_t>(n_qubits)) {
      throw StateInvalid("DfsEncoding: state '" + b.bits +
                         "' has wrong bit count");
    }
    if (b.bits.find_first_not_of("01") != std::string::npos) {
      throw StateInvalid("DfsEncoding: state '" + b.bits + "' is not binary");
    }
    if (!labels.insert(b.label).second) {
      throw StateInvalid("DfsEncoding: duplicate label '" + b.label + "'");
    }
    if (!states.insert(b.bits).second) {
      throw StateInvalid("DfsEncoding: duplicate state '" + b.bits + "'");
    }
  }
}

DfsEncoding standard_single_qubit_encoding() {
  return DfsEncoding{3,
                     {{"a", "100"}, {"1_L", "001"}, {"0_L", "010"}}};
}

DfsEncoding standard_two_qubit_encoding() {
  return DfsEncoding{6,
                     {{"a1", "011000"},
                      {"a2", "000011"},
                      {"00_L", "010010"},
                      {"01_L", "010001"},
                      {"10_L", "001010"},
                      {"11_L", "001001"}}};
}

double verify_dfs(const DfsEncoding& encoding) {
  encoding.validate();
  // Basis states are sigma_z product states, so each is an eigenstate of
  // the collective operator with eigenvalue n - 2 * (number of 1 bits);
  // decoherence freeness is the requirement that they all share it.
  constexpr double kTol = 1e-12;
  const ComplexMatrix sz_total =
      collective_dephasing_operator(encoding.n_qubits);
  double common = 0.0;
  for (std::size_t i = 0; i < encoding.dim(); ++i) {
    const StateVector v = encoding.basis_vector(i);
    const StateVector sv = apply(sz_total, v);
    const cplx eigen = inner_product(v, sv);
    // Residual of (S - eigen) |v| detects non-eigenstates.
    double residual = 0.0;
    for (std::size_t k = 0; k < v.dim; ++k) {
      residual += std::norm(sv.amplitudes[k] - eigen * v.amplitudes[k]);
    }
    if (std::sqrt(residual) > kTol) {
      throw NotDecoherenceFree("verify_dfs: state '" +
                               encoding.basis[i].label +
                               "' is not an eigenstate of the collective "
                               "dephasing operator");
    }
    if (i == 0) {
      common = eigen.real();
    } else if (std::abs(eigen.real() - common) > kTol) {
      throw NotDecoherenceFree(
          "verify_dfs: eigenvalues differ across the basis (" +
          std::to_string(common) + " vs " + std::to_string(eigen.real()) +
          ")");
    }
  }
  return common;
}

ComplexMatrix project_to_dfs(const ComplexMatrix& op_full,
                             const DfsEncoding& encoding) {
  if (op_full.rows() != encoding.full_dim() ||
      op_full.cols() != encoding.full_dim()) {
    throw DimensionMismatch("project_to_dfs: operator dimension " +
                            std::to_string(op_full.rows()) +
                            " does not match encoding space " +
                            std::to_string(encoding.full_dim()));
  }
  const std::size_t d = encoding.dim();
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t row = encoding.product_state_index(i);
    for (std::size_t j = 0; j < d; ++j) {
      out(i, j) = op_full(row, encoding.product_state_index(j));
    }
  }
  return out;
}

double leakage_norm(const ComplexMatrix& u_times_basis,
                    const DfsEncoding& encoding) {
  const std::size_t d = encoding.dim();
  if (u_times_basis.rows() != encoding.full_dim() ||
      u_times_basis.cols() != d) {
    throw DimensionMismatch("leakage_norm: expected a full_dim x d block");
  }
  // (I-P) U B is U B with the rows on the encoded product states removed.
  ComplexMatrix outside = u_times_basis;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t row = encoding.product_state_index(i);
    for (std::size_t j = 0; j < d; ++j) outside(row, j) = cplx{0.0, 0.0};
  }
  const ComplexMatrix gram = matmul(dagger(outside), outside);
  const double top = max_eigenvalue_hermitian(gram);
  return std::sqrt(std::max(0.0, top));
}

LeakageReport leakage(const std::function<ComplexMatrix(double)>& u_of_t,
                      double tau, const DfsEncoding& encoding,
                      int sample_count) {
  if (sample_count < 2) {
    throw SimError("leakage: sample_count must be at least 2");
  }
  const std::size_t d = encoding.dim();
  LeakageReport report;
  report.sample_times.reserve(sample_count);
  for (int s = 0; s < sample_count; ++s) {
    const double t = tau * static_cast<double>(s) /
                     static_cast<double>(sample_count - 1);
    report.sample_times.push_back(t);
    const ComplexMatrix u = u_of_t(t);
    if (u.rows() != encoding.full_dim() || u.cols() != encoding.full_dim()) {
      throw DimensionMismatch("leakage: unitary dimension mismatch");
    }
    ComplexMatrix columns(encoding.full_dim(), d);
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t col = encoding.product_state_index(j);
      for (std::size_t i = 0; i < encoding.full_dim(); ++i) {
        columns(i, j) = u(i, col);
      }
    }
    report.max_leakage =
        std::max(report.max_leakage, leakage_norm(columns, encoding));
  }
  return report;
}

}  // namespace dfsim
