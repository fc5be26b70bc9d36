#include "dfsim/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dfsim/kernels.hpp"

namespace dfsim {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shapes " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("ComplexMatrix: entry count " +
                            std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = cplx{1.0, 0.0};
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r > 0 ? rows.begin()->size() : 0;
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw DimensionMismatch("from_rows: ragged row lengths");
    }
    std::size_t j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::axpy(entries_.size(), cplx{1.0, 0.0}, other.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  kernels::axpy(entries_.size(), cplx{-1.0, 0.0}, other.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx factor) {
  kernels::scal(entries_.size(), factor, data());
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cplx factor, ComplexMatrix a) {
  a *= factor;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

StateVector::StateVector(std::size_t dim_, std::vector<cplx> amps)
    : dim(dim_), amplitudes(std::move(amps)) {
  if (amplitudes.size() != dim) {
    throw DimensionMismatch("StateVector: amplitude count mismatch");
  }
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("basis_state: index out of range");
  StateVector v(dim);
  v.amplitudes[index] = cplx{1.0, 0.0};
  return v;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const cplx& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim != b.dim) throw DimensionMismatch("inner_product: dims differ");
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim; ++i) {
    sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return sum;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: inner dimensions " +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::gemm(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx av = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
        }
      }
    }
  }
  return out;
}

StateVector apply(const ComplexMatrix& a, const StateVector& v) {
  if (a.cols() != v.dim) {
    throw DimensionMismatch("apply: matrix cols " + std::to_string(a.cols()) +
                            " vs vector dim " + std::to_string(v.dim));
  }
  StateVector out(a.rows());
  kernels::gemm(a.rows(), a.cols(), 1, a.data(), v.amplitudes.data(),
                out.amplitudes.data());
  return out;
}

cplx trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("trace: not square");
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const cplx& v : a.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const ComplexMatrix gram = matmul(dagger(a), a);
  return max_abs_diff(gram, ComplexMatrix::identity(a.rows())) <= tol;
}

double operator_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DimensionMismatch("operator_fidelity: need equal square dims");
  }
  cplx overlap{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    overlap += std::conj(u.entries()[i]) * v.entries()[i];
  }
  return std::abs(overlap) / static_cast<double>(u.rows());
}

}  // namespace dfsim
