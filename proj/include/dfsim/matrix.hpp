#pragma once
// Dense complex matrices and state vectors for Hilbert spaces up to
// dimension 64. Values are immutable once built by the construction helpers;
// all free functions are pure.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dfsim/errors.hpp"

namespace dfsim {

using cplx = std::complex<double>;

// Entrywise max-norm tolerance below which a matrix counts as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  cplx& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }
  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx factor);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx factor, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

struct StateVector {
  std::size_t dim = 0;
  std::vector<cplx> amplitudes;

  StateVector() = default;
  explicit StateVector(std::size_t dim_)
      : dim(dim_), amplitudes(dim_, cplx{0.0, 0.0}) {}
  StateVector(std::size_t dim_, std::vector<cplx> amps);

  static StateVector basis_state(std::size_t dim, std::size_t index);

  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

// <a|b>, conjugating the left argument.
cplx inner_product(const StateVector& a, const StateVector& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector apply(const ComplexMatrix& a, const StateVector& v);

cplx trace(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& a, double tol);

// |Tr(u† v)| / d; insensitive to a global phase on either argument.
double operator_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace dfsim
