#include "cdd/operator_core.hpp"

#include <algorithm>
#include <cmath>

namespace cdd {

namespace {

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) +
                                ")");
  }
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "HermitianOperator");
  const double scale = 1.0 + mat_.cwiseAbs().maxCoeff();
  const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12 * scale) {
    throw std::invalid_argument("HermitianOperator: input is not Hermitian (max |M - M^dag| = " +
                                std::to_string(dev) + ")");
  }
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "UnitaryMatrix");
  const ComplexMatrix gram = mat_.adjoint() * mat_;
  const double dev =
      (gram - ComplexMatrix::Identity(mat_.rows(), mat_.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw std::invalid_argument("UnitaryMatrix: input is not unitary (max |U^dag U - I| = " +
                                std::to_string(dev) + ")");
  }
}

StateVector::StateVector(ComplexVector v) : vec_(std::move(v)) {
  if (vec_.size() == 0 || !vec_.allFinite()) {
    throw std::invalid_argument("StateVector: vector must be non-empty and finite");
  }
  const double n = vec_.norm();
  if (n <= 0.0) {
    throw std::invalid_argument("StateVector: cannot normalize the zero vector");
  }
  vec_ /= n;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_finite(a, "commutator");
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b) {
  return commutator(a.matrix(), b.matrix());
}

ComplexMatrix nested_commutator(const HermitianOperator& h, const HermitianOperator& b,
                                int order) {
  if (order < 0) {
    throw std::invalid_argument("nested_commutator: order must be non-negative");
  }
  require_same_dim(h.matrix(), b.matrix(), "nested_commutator");
  ComplexMatrix out = b.matrix();
  for (int i = 0; i < order; ++i) {
    out = commutator(h.matrix(), out);
  }
  return out;
}

SpectralDecomposition eigendecompose(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: eigensolver did not converge");
  }
  SpectralDecomposition dec;
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();

  // Fix the global phase of each column: largest-magnitude entry real, >= 0.
  const Eigen::Index d = dec.dim();
  for (Eigen::Index n = 0; n < d; ++n) {
    Eigen::Index imax = 0;
    dec.eigenvectors.col(n).cwiseAbs().maxCoeff(&imax);
    const std::complex<double> top = dec.eigenvectors(imax, n);
    const double mag = std::abs(top);
    if (mag > 0.0) {
      dec.eigenvectors.col(n) *= std::conj(top) / mag;
    }
  }
  return dec;
}

UnitaryMatrix expm_hermitian(const SpectralDecomposition& dec, double t) {
  const Eigen::Index d = dec.dim();
  ComplexVector phases(d);
  for (Eigen::Index n = 0; n < d; ++n) {
    phases(n) = std::exp(std::complex<double>(0.0, -t * dec.eigenvalues(n)));
  }
  ComplexMatrix u = dec.eigenvectors * phases.asDiagonal() * dec.eigenvectors.adjoint();
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix expm_hermitian(const HermitianOperator& h, double t) {
  return expm_hermitian(eigendecompose(h), t);
}

double hs_norm(const ComplexMatrix& a) {
  require_square_finite(a, "hs_norm");
  return a.norm();
}

double infidelity(const StateVector& target, const StateVector& actual) {
  if (target.dim() != actual.dim()) {
    throw std::invalid_argument("infidelity: dimension mismatch");
  }
  const std::complex<double> overlap = target.amplitudes().dot(actual.amplitudes());
  const double val = 1.0 - std::norm(overlap);
  return std::clamp(val, 0.0, 1.0);
}

}  // namespace cdd
