// DFS encodings, projection and leakage measurement.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dfsim/dfs.hpp"
#include "dfsim/hamiltonian.hpp"
#include "dfsim/hermitian_eig.hpp"

namespace {

using dfsim::ComplexMatrix;
using dfsim::cplx;
using dfsim::DfsEncoding;

int hamming_weight(const std::string& bits) {
  int w = 0;
  for (char c : bits) w += (c == '1');
  return w;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx{dist(rng), dist(rng)};
  }
  ComplexMatrix h = dfsim::dagger(m);
  h += m;
  h *= cplx{0.5, 0.0};
  return h;
}

}  // namespace

TEST_CASE("standard encodings match the published product states") {
  const DfsEncoding one = dfsim::standard_single_qubit_encoding();
  CHECK(one.n_qubits == 3);
  REQUIRE(one.dim() == 3);
  CHECK(one.basis[one.index_of_label("0_L")].bits == "010");
  CHECK(one.basis[one.index_of_label("1_L")].bits == "001");
  CHECK(one.basis[one.index_of_label("a")].bits == "100");
  // Ancilla first, then |1>_L, then |0>_L.
  CHECK(one.basis[0].label == "a");
  for (const auto& b : one.basis) CHECK(hamming_weight(b.bits) == 1);

  const DfsEncoding two = dfsim::standard_two_qubit_encoding();
  CHECK(two.n_qubits == 6);
  REQUIRE(two.dim() == 6);
  CHECK(two.basis[two.index_of_label("11_L")].bits == "001001");
  CHECK(two.basis[0].label == "a1");
  CHECK(two.basis[1].label == "a2");
  for (const auto& b : two.basis) CHECK(hamming_weight(b.bits) == 2);

  // The computational labels pair the two single-qubit encodings on qubits
  // 1-3 and 4-6.
  const std::string zero = "010", one_bits = "001";
  CHECK(two.basis[two.index_of_label("00_L")].bits == zero + zero);
  CHECK(two.basis[two.index_of_label("01_L")].bits == zero + one_bits);
  CHECK(two.basis[two.index_of_label("10_L")].bits == one_bits + zero);
  CHECK(two.basis[two.index_of_label("11_L")].bits == one_bits + one_bits);
}

TEST_CASE("verify_dfs returns the common eigenvalue or rejects") {
  CHECK(dfsim::verify_dfs(dfsim::standard_single_qubit_encoding()) ==
        doctest::Approx(1.0));
  CHECK(dfsim::verify_dfs(dfsim::standard_two_qubit_encoding()) ==
        doctest::Approx(2.0));

  const DfsEncoding bad{2, {{"x", "00"}, {"y", "01"}}};
  CHECK_THROWS_AS(dfsim::verify_dfs(bad), dfsim::NotDecoherenceFree);
}

TEST_CASE("encoding validation catches structural problems") {
  CHECK_THROWS_AS(
      DfsEncoding({2, {{"x", "00"}, {"x", "01"}}}).validate(),
      dfsim::StateInvalid);
  CHECK_THROWS_AS(
      DfsEncoding({2, {{"x", "00"}, {"y", "00"}}}).validate(),
      dfsim::StateInvalid);
  CHECK_THROWS_AS(
      DfsEncoding({2, {{"x", "000"}}}).validate(),
      dfsim::StateInvalid);
}

TEST_CASE("project_to_dfs: identity, linearity, Hermiticity") {
  const DfsEncoding enc = dfsim::standard_single_qubit_encoding();
  CHECK(dfsim::max_abs_diff(
            dfsim::project_to_dfs(ComplexMatrix::identity(8), enc),
            ComplexMatrix::identity(3)) == 0.0);

  std::mt19937_64 rng(41);
  const ComplexMatrix a = random_hermitian(8, rng);
  const ComplexMatrix b = random_hermitian(8, rng);

  const ComplexMatrix pa = dfsim::project_to_dfs(a, enc);
  CHECK(dfsim::is_hermitian(pa, 1e-14));

  ComplexMatrix sum_inside = dfsim::project_to_dfs(a + b, enc);
  ComplexMatrix sum_outside = pa + dfsim::project_to_dfs(b, enc);
  CHECK(dfsim::max_abs_diff(sum_inside, sum_outside) <= 1e-15);

  CHECK_THROWS_AS(dfsim::project_to_dfs(ComplexMatrix::identity(4), enc),
                  dfsim::DimensionMismatch);
}

TEST_CASE("projecting the two-qubit protocol Hamiltonian gives the "
          "six-level logical matrix plus an identity offset") {
  const double phi = std::numbers::pi / 5.0;
  const double j3 = 1.0;
  dfsim::CouplingConfig config;
  config.n_qubits = 6;
  config.jxy[{3, 5}] = j3 * std::cos(phi);
  config.jzz[{3, 6}] = j3 * std::sin(phi);

  const ComplexMatrix h = dfsim::build_hamiltonian(config);
  const DfsEncoding enc = dfsim::standard_two_qubit_encoding();
  const ComplexMatrix projected = dfsim::project_to_dfs(h, enc);

  // Basis order (a1, a2, 00, 01, 10, 11): couplings a1<->00 and a2<->11,
  // diagonal 2 J sin(phi) on |00> and |11>, plus the offset -J sin(phi).
  ComplexMatrix expected(6, 6);
  const std::size_t a1 = enc.index_of_label("a1");
  const std::size_t a2 = enc.index_of_label("a2");
  const std::size_t s00 = enc.index_of_label("00_L");
  const std::size_t s11 = enc.index_of_label("11_L");
  expected(a1, s00) = expected(s00, a1) = cplx{j3 * std::cos(phi), 0.0};
  expected(a2, s11) = expected(s11, a2) = cplx{j3 * std::cos(phi), 0.0};
  expected(s00, s00) = expected(s11, s11) = cplx{2.0 * j3 * std::sin(phi), 0.0};
  expected += cplx{-j3 * std::sin(phi), 0.0} * ComplexMatrix::identity(6);

  CHECK(dfsim::max_abs_diff(projected, expected) < 1e-15);
}

TEST_CASE("leakage: identity family, leaky family") {
  const DfsEncoding enc = dfsim::standard_single_qubit_encoding();

  auto identity_family = [](double) { return ComplexMatrix::identity(8); };
  const dfsim::LeakageReport none = dfsim::leakage(identity_family, 1.0, enc, 11);
  CHECK(none.max_leakage == 0.0);
  CHECK(none.sample_times.size() == 11);
  CHECK(none.sample_times.front() == 0.0);
  CHECK(none.sample_times.back() == doctest::Approx(1.0));

  // sigma_x on qubit 1 changes the excitation number, so it drives the
  // encoded states straight out of the subspace: ||(I-P)U(t)P|| = |sin t|.
  const ComplexMatrix hx = dfsim::pauli_on_site(dfsim::PauliAxis::X, 1, 3);
  auto leaky_family = [&](double t) { return dfsim::matexp_hermitian(hx, t); };
  const dfsim::LeakageReport leaky = dfsim::leakage(leaky_family, 1.0, enc, 21);
  CHECK(leaky.max_leakage > 0.1);
  CHECK(leaky.max_leakage == doctest::Approx(std::abs(std::sin(1.0))));

  CHECK_THROWS_AS(dfsim::leakage(identity_family, 1.0, enc, 1),
                  dfsim::SimError);
}
