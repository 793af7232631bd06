#include "cdd/drive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cdd {

namespace {

std::vector<int> factor_indices(int k_terms, Ordering ordering) {
  std::vector<int> ks;
  ks.reserve(2 * static_cast<std::size_t>(k_terms));
  for (int k = -k_terms; k <= k_terms; ++k) {
    if (k != 0) ks.push_back(k);
  }
  if (ordering == Ordering::descending) {
    std::reverse(ks.begin(), ks.end());
  }
  return ks;
}

// Abort if the target level is degenerate with a neighbor.
void require_resolved_level(const SpectralDecomposition& dec, int index, const char* where) {
  const Eigen::Index d = dec.dim();
  if (index < 0 || index >= d) {
    throw std::invalid_argument(std::string(where) + ": target index out of range");
  }
  double scale = 1.0;
  for (Eigen::Index n = 0; n < d; ++n) {
    scale = std::max(scale, std::abs(dec.eigenvalues(n)));
  }
  const double tol = 1e-10 * scale;
  if (index > 0 && dec.eigenvalues(index) - dec.eigenvalues(index - 1) < tol) {
    throw std::domain_error(std::string(where) + ": target level " + std::to_string(index) +
                            " is degenerate with level " + std::to_string(index - 1));
  }
  if (index + 1 < d && dec.eigenvalues(index + 1) - dec.eigenvalues(index) < tol) {
    throw std::domain_error(std::string(where) + ": target level " + std::to_string(index) +
                            " is degenerate with level " + std::to_string(index + 1));
  }
}

}  // namespace

UnitaryMatrix composite_unitary(const HermitianOperator& h, const HermitianOperator& dh,
                                const AngleSchedule& sched, Ordering ordering) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("composite_unitary: dimension mismatch");
  }
  const SpectralDecomposition dec_h = eigendecompose(h);
  const SpectralDecomposition dec_dh = eigendecompose(dh);
  ComplexMatrix u = ComplexMatrix::Identity(h.dim(), h.dim());
  for (const int k : factor_indices(sched.terms(), ordering)) {
    const AnglePair p = sched.pair(k);
    const ComplexMatrix factor = expm_hermitian(dec_h, -p.theta).matrix() *
                                 expm_hermitian(dec_dh, 0.5 * p.phi).matrix() *
                                 expm_hermitian(dec_h, p.theta).matrix();
    u = factor * u;
  }
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix adiabatic_unitary(const HermitianOperator& agp, double delta_lambda) {
  return expm_hermitian(agp, delta_lambda);
}

GateSequence gate_sequence(const AngleSchedule& sched, bool merge, Ordering ordering) {
  GateSequence seq;
  seq.merged = merge;
  for (const int k : factor_indices(sched.terms(), ordering)) {
    const AnglePair p = sched.pair(k);
    seq.steps.push_back({GateStep::Generator::H, p.theta});
    seq.steps.push_back({GateStep::Generator::DH, 0.5 * p.phi});
    seq.steps.push_back({GateStep::Generator::H, -p.theta});
  }
  if (!merge) return seq;

  // combine runs of consecutive same-generator steps into a single step
  std::vector<GateStep> merged;
  for (const GateStep& step : seq.steps) {
    if (!merged.empty() && merged.back().generator == step.generator) {
      merged.back().angle += step.angle;
    } else {
      merged.push_back(step);
    }
  }
  seq.steps = std::move(merged);
  return seq;
}

UnitaryMatrix replay_sequence(const GateSequence& seq, const HermitianOperator& h,
                              const HermitianOperator& dh) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("replay_sequence: dimension mismatch");
  }
  const SpectralDecomposition dec_h = eigendecompose(h);
  const SpectralDecomposition dec_dh = eigendecompose(dh);
  ComplexMatrix u = ComplexMatrix::Identity(h.dim(), h.dim());
  for (const GateStep& step : seq.steps) {
    const SpectralDecomposition& dec =
        step.generator == GateStep::Generator::H ? dec_h : dec_dh;
    u = expm_hermitian(dec, step.angle).matrix() * u;
  }
  return UnitaryMatrix(std::move(u));
}

double drive_infidelity(const ParametrizedHamiltonian& model, double lambda,
                        const AngleSchedule& sched, int target_index, Ordering ordering) {
  const HermitianOperator h = model.hamiltonian(lambda);
  const HermitianOperator dh = model.derivative(lambda);
  const HermitianOperator h_next = model.hamiltonian(lambda + sched.delta_lambda());

  const SpectralDecomposition dec = eigendecompose(h);
  const SpectralDecomposition dec_next = eigendecompose(h_next);
  require_resolved_level(dec, target_index, "drive_infidelity");
  require_resolved_level(dec_next, target_index, "drive_infidelity");

  const UnitaryMatrix u = composite_unitary(h, dh, sched, ordering);
  const StateVector driven(u.matrix() * dec.eigenvectors.col(target_index));
  return infidelity(dec_next.state(target_index), driven);
}

double quench_infidelity(const ParametrizedHamiltonian& model, double lambda,
                         double delta_lambda, int target_index) {
  const SpectralDecomposition dec = eigendecompose(model.hamiltonian(lambda));
  const SpectralDecomposition dec_next =
      eigendecompose(model.hamiltonian(lambda + delta_lambda));
  require_resolved_level(dec, target_index, "quench_infidelity");
  require_resolved_level(dec_next, target_index, "quench_infidelity");
  return infidelity(dec_next.state(target_index), dec.state(target_index));
}

SweepResult sweep_k(const ParametrizedHamiltonian& model, double lambda, double delta_lambda,
                    double omega, int k_max, std::optional<double> eta, Ordering ordering) {
  if (k_max < 1) {
    throw std::invalid_argument("sweep_k: k_max must be >= 1");
  }
  const HermitianOperator h = model.hamiltonian(lambda);
  const HermitianOperator dh = model.derivative(lambda);
  const double h_norm = hs_norm(h.matrix());
  const double dh_norm = hs_norm(dh.matrix());
  const double quench = quench_infidelity(model, lambda, delta_lambda, 0);
  const SpectralFunction ground_spec = spectral_function(h, dh, true);

  SweepResult result;
  result.omega = omega;
  result.eta = eta;
  result.predicted_period = period_prediction(omega, ground_spec.delta_min);
  result.rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const AngleSchedule sched = eta ? regularized_angles(k, omega, delta_lambda, *eta)
                                    : standard_angles(k, omega, delta_lambda);
    DriveResult row;
    row.k_terms = k;
    row.infidelity = drive_infidelity(model, lambda, sched, 0, ordering);
    row.quench_infidelity = quench;
    row.complexity = complexity_estimate(sched, h_norm, dh_norm);
    result.rows.push_back(row);
  }
  return result;
}

double generator_gap(const HermitianOperator& h, const HermitianOperator& dh,
                     const AngleSchedule& sched, Ordering ordering) {
  const UnitaryMatrix u = composite_unitary(h, dh, sched, ordering);
  const HermitianOperator v = effective_generator(h, dh, sched);
  const UnitaryMatrix u_gen = expm_hermitian(v, sched.delta_lambda());
  return hs_norm(u.matrix() - u_gen.matrix());
}

}  // namespace cdd
