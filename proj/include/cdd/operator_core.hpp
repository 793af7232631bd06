// operator_core.hpp — dense complex linear algebra for small quantum systems:
// Hermitian operators, eigendecompositions, Hermitian-generated matrix
// exponentials, commutators, norms, and state fidelities.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace cdd {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ------------------------------ value types ---------------------------------

// Square complex matrix with a Hermiticity guarantee checked at construction:
// max |M - M^dag| <= 1e-12 * (1 + max |M|), entrywise.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

// Square complex matrix with max |U^dag U - I| <= 1e-10, entrywise.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

// Normalized complex vector. Construction normalizes; a zero vector is an error.
class StateVector {
 public:
  explicit StateVector(ComplexVector v);

  const ComplexVector& amplitudes() const { return vec_; }
  Eigen::Index dim() const { return vec_.size(); }

 private:
  ComplexVector vec_;
};

// Ascending eigenvalues and orthonormal eigenvectors (as matrix columns) of a
// Hermitian operator. Column phases are fixed so that the largest-magnitude
// component of each eigenvector is real and non-negative.
struct SpectralDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // column n is |n>

  Eigen::Index dim() const { return eigenvalues.size(); }
  StateVector state(Eigen::Index n) const { return StateVector(eigenvectors.col(n)); }
};

// ------------------------------ operations ----------------------------------

// ab - ba. For Hermitian a, b the result is anti-Hermitian.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b);

// Repeated application of [h, .] to b; order 0 returns b unchanged.
ComplexMatrix nested_commutator(const HermitianOperator& h, const HermitianOperator& b,
                                int order);

// Dense Hermitian eigensolve with the phase convention described above.
SpectralDecomposition eigendecompose(const HermitianOperator& h);

// exp(-i t h), via the spectral decomposition (exactly unitary up to roundoff).
UnitaryMatrix expm_hermitian(const HermitianOperator& h, double t);
UnitaryMatrix expm_hermitian(const SpectralDecomposition& dec, double t);

// Hilbert-Schmidt (Frobenius) norm, sqrt(sum |a_ij|^2).
double hs_norm(const ComplexMatrix& a);

// 1 - |<target|actual>|^2, clamped to [0, 1] against roundoff.
double infidelity(const StateVector& target, const StateVector& actual);

}  // namespace cdd
