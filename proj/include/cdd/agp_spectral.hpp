// agp_spectral.hpp — exact adiabatic gauge potential, spectral functions and
// gap bounds, the effective drive generator in closed spectral form, distance
// functionals and kernel curves, and the truncated nested-commutator fit.

#pragma once

#include "cdd/operator_core.hpp"
#include "cdd/schedule.hpp"

#include <stdexcept>
#include <vector>

namespace cdd {

// One delta line of the spectral function: energy difference omega = E_m - E_n
// and weight |<m|dH|n>|^2.
struct SpectralLine {
  double omega = 0.0;
  double weight = 0.0;
};

// Finite line list representing Phi(omega), together with the support bounds
// delta_min = min |omega| and delta_max = max |omega| over the retained lines.
// Lines whose coupling falls below 1e-12 * ||dH|| (weight below the square of
// that) are treated as exact zeros and dropped.
struct SpectralFunction {
  std::vector<SpectralLine> lines;
  double delta_min = 0.0;
  double delta_max = 0.0;
  bool ground_only = false;
};

// Weighted least-squares fit of -1/omega by odd monomials omega^(2l-1),
// l = 1..d, over a discrete spectral function.
struct TruncatedAgpFit {
  int order = 0;
  std::vector<double> alphas;
  double residual = 0.0;
};

// Raised when the gauge potential is undefined: a (near-)degenerate pair of
// eigenstates is coupled by dH.
struct GaugePotentialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact gauge potential of h along dh: in the eigenbasis of h,
// <m|A|n> = i <m|dh|n> / (E_n - E_m) for m != n, zero on the diagonal.
HermitianOperator exact_agp(const HermitianOperator& h, const HermitianOperator& dh);

// Spectral function of the pair (h, dh). With ground_only, only transitions
// involving the ground state enter, with lines mirrored to +-omega_m0.
SpectralFunction spectral_function(const HermitianOperator& h, const HermitianOperator& dh,
                                   bool ground_only);

// Largest gap from the ground state, E_max - E_0. This is the natural cutoff
// for the drive even when the extremal transition carries negligible weight.
double max_gap_from_ground(const SpectralDecomposition& dec);

// Effective generator of the composite drive:
// <m|V|n> = i <m|dh|n> sum_k (phi_k / dl) sin(theta_k (E_m - E_n)).
HermitianOperator effective_generator(const HermitianOperator& h, const HermitianOperator& dh,
                                      const AngleSchedule& sched);

// Squared Hilbert-Schmidt distance between the exact gauge potential and the
// effective generator, evaluated on the spectral lines:
// sum_lines weight * [1/omega + sum_k (phi_k/dl) sin(theta_k omega)]^2.
double agp_distance(const SpectralFunction& spec, const AngleSchedule& sched);

// Pointwise deviation kernel [g(omega) + sum_k (phi_k/dl) sin(theta_k omega)]^2
// with g = 1/omega, or omega/(omega^2 + eta^2) when regularized (eta taken
// from the schedule).
std::vector<double> kernel_curve(const AngleSchedule& sched, const std::vector<double>& omegas,
                                 bool regularized);

// Minimize sum_lines w * [1/omega + sum_l alpha_l omega^(2l-1)]^2 over the
// alphas; rank-deficient systems resolve to the minimum-norm solution.
TruncatedAgpFit fit_truncated_agp(const SpectralFunction& spec, int order);

// A^(d) = i sum_l alpha_l [h, .]^(2l-1) dh, the truncated-commutator operator
// for the fitted coefficients.
HermitianOperator truncated_agp_operator(const HermitianOperator& h,
                                         const HermitianOperator& dh,
                                         const TruncatedAgpFit& fit);

}  // namespace cdd
