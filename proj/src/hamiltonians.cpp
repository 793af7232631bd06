#include "cdd/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace cdd {

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, std::complex<double>(0.0, -1.0), std::complex<double>(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace

HermitianOperator TwoLevelModel::hamiltonian(double lambda) const {
  return HermitianOperator(hx_.value(lambda) * pauli_x() + hz_.value(lambda) * pauli_z());
}

HermitianOperator TwoLevelModel::derivative(double lambda) const {
  (void)lambda;
  return HermitianOperator(hx_.slope * pauli_x() + hz_.slope * pauli_z());
}

double TwoLevelModel::gap(double lambda) const {
  const double hx = hx_.value(lambda);
  const double hz = hz_.value(lambda);
  const double r2 = hx * hx + hz * hz;
  if (r2 == 0.0) {
    throw std::domain_error("TwoLevelModel::gap: degenerate point, hx = hz = 0");
  }
  return 2.0 * std::sqrt(r2);
}

HermitianOperator TwoLevelModel::exact_agp(double lambda) const {
  const double hx = hx_.value(lambda);
  const double hz = hz_.value(lambda);
  const double r2 = hx * hx + hz * hz;
  if (r2 == 0.0) {
    throw std::domain_error("TwoLevelModel::exact_agp: degenerate point, hx = hz = 0");
  }
  const double coeff = (hz * hx_.slope - hx * hz_.slope) / (2.0 * r2);
  return HermitianOperator(coeff * pauli_y());
}

LMGModel::LMGModel(int n_spins, double j0, double hx0)
    : n_spins_(n_spins), j0_(j0), hx0_(hx0) {
  if (n_spins < 1) {
    throw std::invalid_argument("LMGModel: n_spins must be >= 1");
  }
}

ComplexMatrix collective_sz(int n_spins) {
  const Eigen::Index dim = n_spins + 1;
  const double s = 0.5 * n_spins;
  ComplexMatrix sz = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    sz(i, i) = s - static_cast<double>(i);
  }
  return sz;
}

ComplexMatrix collective_sx(int n_spins) {
  const Eigen::Index dim = n_spins + 1;
  const double s = 0.5 * n_spins;
  ComplexMatrix sx = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 1; i < dim; ++i) {
    // <S, m+1 | S+ | S, m> at m = s - i; Sx = (S+ + S-) / 2
    const double m = s - static_cast<double>(i);
    const double amp = 0.5 * std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    sx(i - 1, i) = amp;
    sx(i, i - 1) = amp;
  }
  return sx;
}

HermitianOperator LMGModel::hamiltonian(double lambda) const {
  const ComplexMatrix sz = collective_sz(n_spins_);
  const ComplexMatrix sx = collective_sx(n_spins_);
  ComplexMatrix h = (2.0 * j0_ / n_spins_) * (sz * sz) + (2.0 * hx0_ * lambda) * sx;
  return HermitianOperator(std::move(h));
}

HermitianOperator LMGModel::derivative(double lambda) const {
  (void)lambda;
  return HermitianOperator(2.0 * hx0_ * collective_sx(n_spins_));
}

}  // namespace cdd
