#include "dfsim/hamiltonian.hpp"

#include <string>

namespace dfsim {

namespace {

constexpr int kMaxQubits = 6;

void require_site(int site, int n_qubits, const char* what) {
  if (site < 1 || site > n_qubits) {
    throw SiteOutOfRange(std::string(what) + ": site " + std::to_string(site) +
                         " outside 1.." + std::to_string(n_qubits));
  }
}

void require_pair(int k, int l, int n_qubits, const char* what) {
  if (k < 1 || l <= k || l > n_qubits) {
    throw SiteOutOfRange(std::string(what) + ": pair (" + std::to_string(k) +
                         "," + std::to_string(l) + ") needs 1 <= k < l <= " +
                         std::to_string(n_qubits));
  }
}

}  // namespace

void CouplingConfig::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SiteOutOfRange("CouplingConfig: n_qubits " +
                         std::to_string(n_qubits) + " outside 1.." +
                         std::to_string(kMaxQubits));
  }
  for (const auto& [pair, value] : jxy) {
    (void)value;
    require_pair(pair.first, pair.second, n_qubits, "jxy");
  }
  for (const auto& [pair, value] : jzz) {
    (void)value;
    require_pair(pair.first, pair.second, n_qubits, "jzz");
  }
  for (const auto& [site, value] : jz_local) {
    (void)value;
    require_site(site, n_qubits, "jz_local");
  }
}

CouplingConfig& CouplingConfig::operator+=(const CouplingConfig& other) {
  if (n_qubits != other.n_qubits) {
    throw DimensionMismatch("CouplingConfig: adding configs with different "
                            "qubit counts");
  }
  for (const auto& [key, value] : other.jxy) jxy[key] += value;
  for (const auto& [key, value] : other.jzz) jzz[key] += value;
  for (const auto& [key, value] : other.jz_local) jz_local[key] += value;
  return *this;
}

ComplexMatrix pauli_matrix(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case PauliAxis::Y:
      return ComplexMatrix::from_rows(
          {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}});
    case PauliAxis::Z:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  throw SimError("pauli_matrix: unknown axis");
}

ComplexMatrix pauli_on_site(PauliAxis axis, int site, int n_qubits) {
  require_site(site, n_qubits, "pauli_on_site");
  ComplexMatrix op = ComplexMatrix::identity(1);
  for (int q = 1; q <= n_qubits; ++q) {
    op = kron(op, q == site ? pauli_matrix(axis)
                            : ComplexMatrix::identity(2));
  }
  return op;
}

ComplexMatrix build_rxy(int k, int l, int n_qubits) {
  require_pair(k, l, n_qubits, "build_rxy");
  ComplexMatrix xx = matmul(pauli_on_site(PauliAxis::X, k, n_qubits),
                            pauli_on_site(PauliAxis::X, l, n_qubits));
  ComplexMatrix yy = matmul(pauli_on_site(PauliAxis::Y, k, n_qubits),
                            pauli_on_site(PauliAxis::Y, l, n_qubits));
  xx += yy;
  xx *= cplx{0.5, 0.0};
  return xx;
}

ComplexMatrix build_rz(int k, int l, int n_qubits) {
  require_pair(k, l, n_qubits, "build_rz");
  return matmul(pauli_on_site(PauliAxis::Z, k, n_qubits),
                pauli_on_site(PauliAxis::Z, l, n_qubits));
}

ComplexMatrix build_hamiltonian(const CouplingConfig& config) {
  config.validate();
  const std::size_t dim = std::size_t{1} << config.n_qubits;
  ComplexMatrix h(dim, dim);
  for (const auto& [pair, value] : config.jxy) {
    h += cplx{value, 0.0} * build_rxy(pair.first, pair.second, config.n_qubits);
  }
  for (const auto& [pair, value] : config.jzz) {
    h += cplx{value, 0.0} * build_rz(pair.first, pair.second, config.n_qubits);
  }
  for (const auto& [site, value] : config.jz_local) {
    h += cplx{value, 0.0} *
         pauli_on_site(PauliAxis::Z, site, config.n_qubits);
  }
  return h;
}

ComplexMatrix collective_dephasing_operator(int n_qubits) {
  if (n_qubits < 1) {
    throw SiteOutOfRange("collective_dephasing_operator: n_qubits < 1");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix op(dim, dim);
  for (int site = 1; site <= n_qubits; ++site) {
    op += pauli_on_site(PauliAxis::Z, site, n_qubits);
  }
  return op;
}

}  // namespace dfsim
