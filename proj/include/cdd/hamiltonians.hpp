// hamiltonians.hpp — parametrized model Hamiltonians: a driven two-level
// system and the fully-connected transverse-field Ising model restricted to
// its maximum-spin (collective) sector.

#pragma once

#include "cdd/operator_core.hpp"

namespace cdd {

// Affine parameter schedule, value(l) = offset + slope * l.
struct Affine {
  double offset = 0.0;
  double slope = 0.0;

  double value(double l) const { return offset + slope * l; }
};

// Common contract for the models: dimension, H(lambda), dH/dlambda.
class ParametrizedHamiltonian {
 public:
  virtual ~ParametrizedHamiltonian() = default;

  virtual Eigen::Index dimension() const = 0;
  virtual HermitianOperator hamiltonian(double lambda) const = 0;
  virtual HermitianOperator derivative(double lambda) const = 0;
};

// H(lambda) = hx(lambda) X + hz(lambda) Z with affine field schedules.
class TwoLevelModel final : public ParametrizedHamiltonian {
 public:
  TwoLevelModel(Affine hx, Affine hz) : hx_(hx), hz_(hz) {}

  Eigen::Index dimension() const override { return 2; }
  HermitianOperator hamiltonian(double lambda) const override;
  HermitianOperator derivative(double lambda) const override;

  const Affine& hx() const { return hx_; }
  const Affine& hz() const { return hz_; }

  // Energy gap 2*sqrt(hx^2 + hz^2). Errors at the degenerate point hx = hz = 0.
  double gap(double lambda) const;

  // Closed-form adiabatic gauge potential,
  // [hz hx' - hx hz'] / (2 (hx^2 + hz^2)) * Y.
  HermitianOperator exact_agp(double lambda) const;

 private:
  Affine hx_;
  Affine hz_;
};

// H(lambda) = (J0 / 2N) sum_{i,j} Z_i Z_j + hx0 * lambda * sum_i X_i on N
// spins, restricted to the S = N/2 sector where it reads
// (2 J0 / N) Sz^2 + 2 hx0 lambda Sx on N+1 levels. The i = j terms of the
// double sum are kept, contributing the constant (J0/2) I.
class LMGModel final : public ParametrizedHamiltonian {
 public:
  LMGModel(int n_spins, double j0, double hx0);

  Eigen::Index dimension() const override { return n_spins_ + 1; }
  HermitianOperator hamiltonian(double lambda) const override;
  HermitianOperator derivative(double lambda) const override;

  int n_spins() const { return n_spins_; }
  double j0() const { return j0_; }
  double hx0() const { return hx0_; }

 private:
  int n_spins_;
  double j0_;
  double hx0_;
};

// Collective spin-S matrices for S = N/2, in the Sz eigenbasis ordered by
// descending eigenvalue m = S, S-1, ..., -S.
ComplexMatrix collective_sx(int n_spins);
ComplexMatrix collective_sz(int n_spins);

}  // namespace cdd
