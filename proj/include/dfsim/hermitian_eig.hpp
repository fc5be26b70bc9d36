#pragma once
// Hermitian eigendecomposition and the spectral matrix exponential.
//
// The solver is a cyclic complex Jacobi iteration: adequate and very accurate
// at the dimensions this library handles (<= 64), and it keeps eigenvectors
// orthonormal to machine precision, which is what guarantees exp(-iHt) stays
// unitary.

#include <vector>

#include "dfsim/matrix.hpp"

namespace dfsim {

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Throws NonHermitianInput when max|h - h†| > kHermitianTol.
HermitianEigen eigh(const ComplexMatrix& h);

// exp(-i h t). Throws NonHermitianInput on a non-Hermitian argument.
ComplexMatrix matexp_hermitian(const ComplexMatrix& h, double t);

double min_eigenvalue_hermitian(const ComplexMatrix& h);
double max_eigenvalue_hermitian(const ComplexMatrix& h);
// max |eigenvalue|, i.e. the operator 2-norm of a Hermitian matrix.
double spectral_norm_hermitian(const ComplexMatrix& h);

}  // namespace dfsim
