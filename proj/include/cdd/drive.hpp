// drive.hpp — the composite drive unitary, its gate-sequence form, and the
// infidelity experiments: quench baselines, K sweeps, and the gap between the
// composite unitary and its single-generator approximation.

#pragma once

#include "cdd/agp_spectral.hpp"
#include "cdd/hamiltonians.hpp"
#include "cdd/operator_core.hpp"
#include "cdd/schedule.hpp"

#include <optional>
#include <vector>

namespace cdd {

// Application order of the k-indexed factors: ascending applies k = -K first
// and k = +K last (leftmost in the operator product).
enum class Ordering { ascending, descending };

// One exponential step exp(-i * angle * G) with G one of the two generators.
struct GateStep {
  enum class Generator { H, DH };
  Generator generator = Generator::H;
  double angle = 0.0;
};

struct GateSequence {
  std::vector<GateStep> steps;  // in application order, first-applied first
  bool merged = false;
};

struct DriveResult {
  int k_terms = 0;
  double infidelity = 0.0;
  double quench_infidelity = 0.0;
  ComplexityReport complexity;
};

struct SweepResult {
  std::vector<DriveResult> rows;  // ordered by K
  double predicted_period = 0.0;  // Omega / delta_min of the ground spectral function
  double omega = 0.0;
  std::optional<double> eta;
};

// Product over k = -K..-1, 1..K of exp(i theta_k H) exp(-i phi_k/2 dH) exp(-i theta_k H).
UnitaryMatrix composite_unitary(const HermitianOperator& h, const HermitianOperator& dh,
                                const AngleSchedule& sched,
                                Ordering ordering = Ordering::ascending);

// Quench-limit transport unitary exp(-i delta_lambda A).
UnitaryMatrix adiabatic_unitary(const HermitianOperator& agp, double delta_lambda);

// Gate-sequence form of the composite unitary. Unmerged: 3 * 2K steps.
// Merged: adjacent H exponentials of consecutive factors combine, 2 * 2K + 1 steps.
GateSequence gate_sequence(const AngleSchedule& sched, bool merge,
                           Ordering ordering = Ordering::ascending);

// Apply the steps in order through expm_hermitian.
UnitaryMatrix replay_sequence(const GateSequence& seq, const HermitianOperator& h,
                              const HermitianOperator& dh);

// 1 - |<n(lambda + dl)| U(lambda) |n(lambda)>|^2 for eigenstate target_index.
double drive_infidelity(const ParametrizedHamiltonian& model, double lambda,
                        const AngleSchedule& sched, int target_index = 0,
                        Ordering ordering = Ordering::ascending);

// 1 - |<n(lambda + dl)|n(lambda)>|^2, the no-drive baseline.
double quench_infidelity(const ParametrizedHamiltonian& model, double lambda,
                         double delta_lambda, int target_index = 0);

// Rows for K = 1..k_max targeting the ground state, with standard angles, or
// regularized angles when eta is given.
SweepResult sweep_k(const ParametrizedHamiltonian& model, double lambda, double delta_lambda,
                    double omega, int k_max, std::optional<double> eta = std::nullopt,
                    Ordering ordering = Ordering::ascending);

// || U_composite - exp(-i dl V) ||_HS, the single-generator approximation gap.
double generator_gap(const HermitianOperator& h, const HermitianOperator& dh,
                     const AngleSchedule& sched, Ordering ordering = Ordering::ascending);

}  // namespace cdd
