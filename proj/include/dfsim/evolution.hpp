#pragma once
// Time evolution under H(t) = J(t) * H_unit for a fixed coupling direction
// and a scalar pulse envelope J(t).
//
// The envelope has unit peak amplitude, so the pulse duration follows from
// the requested pulse area: tau = area for the constant envelope and
// tau = 2 * area for sin^2. The envelope is sampled piecewise-constant at
// segment midpoints; within that discretization the propagator
// U(t) = V exp(-i Lambda a(t)) V† is exact, with a(t) the accumulated area.

#include <vector>

#include "dfsim/dfs.hpp"
#include "dfsim/hermitian_eig.hpp"
#include "dfsim/matrix.hpp"

namespace dfsim {

enum class Envelope { Constant, SinSquared };

// Unit-peak envelope value at time t of a pulse lasting tau.
double envelope_value(Envelope env, double t, double tau);
double envelope_duration(Envelope env, double pulse_area);

class SpectralEvolution {
 public:
  SpectralEvolution(const ComplexMatrix& h_unit, Envelope env,
                    double pulse_area, int segments);

  double duration() const { return tau_; }
  double pulse_area() const { return pulse_area_; }
  Envelope envelope() const { return env_; }
  std::size_t dim() const { return eig_.eigenvectors.rows(); }

  const HermitianEigen& eigensystem() const { return eig_; }
  const ComplexMatrix& h_unit() const { return h_unit_; }

  // Accumulated envelope area over [0, t].
  double area_at(double t) const;

  ComplexMatrix unitary_at(double t) const;
  StateVector evolve_state(const StateVector& psi0, double t) const;

  // Coordinates of psi in the eigenbasis (V† psi); the hot entry point for
  // repeated sampling.
  std::vector<cplx> to_eigenbasis(const StateVector& psi) const;
  // exp(-i lambda_k a(t)) for every eigenvalue.
  std::vector<cplx> phases_at(double t) const;

 private:
  ComplexMatrix h_unit_;
  Envelope env_;
  double pulse_area_ = 0.0;
  double tau_ = 0.0;
  int segments_ = 0;
  HermitianEigen eig_;
  ComplexMatrix v_dagger_;
  std::vector<double> cumulative_area_;  // per segment boundary
  std::vector<double> segment_value_;    // midpoint-sampled envelope
};

// Evolution data restricted to an encoded subspace: produces the projected
// unitary block B† U(t) B and subspace coefficients of evolving states
// without forming full-space operators.
class ProjectedEvolution {
 public:
  ProjectedEvolution(const SpectralEvolution& evo, const DfsEncoding& enc);

  std::size_t dim() const { return rows_.rows(); }
  const SpectralEvolution& evolution() const { return *evo_; }

  // W(t) = B† U(t) B, the d x d projected evolution block.
  ComplexMatrix block_at(double t) const;

  // U(t) B, the encoded basis columns embedded in the full space.
  ComplexMatrix embedded_columns_at(double t) const;

  // Subspace coefficients B† U(t) |psi0> given y = V† psi0.
  std::vector<cplx> coefficients_at(double t,
                                    const std::vector<cplx>& y) const;

 private:
  const SpectralEvolution* evo_;
  ComplexMatrix rows_;      // d x n: rows of V at the encoded product states
  ComplexMatrix rows_dag_;  // n x d
};

}  // namespace dfsim
