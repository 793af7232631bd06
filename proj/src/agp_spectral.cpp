#include "cdd/agp_spectral.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <sstream>

namespace cdd {

namespace {

// Couplings below this fraction of ||dh|| are treated as exact zeros.
constexpr double kCouplingCutoff = 1e-12;

// dh expressed in the eigenbasis of h.
ComplexMatrix to_eigenbasis(const SpectralDecomposition& dec, const HermitianOperator& dh) {
  return dec.eigenvectors.adjoint() * dh.matrix() * dec.eigenvectors;
}

double kernel_sum(const AngleSchedule& sched, double omega) {
  double s = 0.0;
  for (const auto& p : sched.pairs()) {
    s += p.phi / sched.delta_lambda() * std::sin(p.theta * omega);
  }
  return s;
}

}  // namespace

HermitianOperator exact_agp(const HermitianOperator& h, const HermitianOperator& dh) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("exact_agp: dimension mismatch");
  }
  const SpectralDecomposition dec = eigendecompose(h);
  const ComplexMatrix dh_eig = to_eigenbasis(dec, dh);
  const Eigen::Index d = dec.dim();

  const double gap_scale = 1e-10 * hs_norm(h.matrix());
  const double coupling_scale = kCouplingCutoff * hs_norm(dh.matrix());

  ComplexMatrix a_eig = ComplexMatrix::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      if (m == n) continue;
      const double omega_nm = dec.eigenvalues(n) - dec.eigenvalues(m);
      const double coupling = std::abs(dh_eig(m, n));
      if (std::abs(omega_nm) < gap_scale) {
        if (coupling > coupling_scale) {
          std::ostringstream msg;
          msg << "exact_agp: gauge potential undefined, degenerate pair (m = " << m
              << ", n = " << n << ", omega_mn = " << -omega_nm << ") has coupling " << coupling;
          throw GaugePotentialError(msg.str());
        }
        continue;  // uncoupled degenerate pair
      }
      a_eig(m, n) = std::complex<double>(0.0, 1.0) * dh_eig(m, n) / omega_nm;
    }
  }
  return HermitianOperator(dec.eigenvectors * a_eig * dec.eigenvectors.adjoint());
}

SpectralFunction spectral_function(const HermitianOperator& h, const HermitianOperator& dh,
                                   bool ground_only) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("spectral_function: dimension mismatch");
  }
  const SpectralDecomposition dec = eigendecompose(h);
  const ComplexMatrix dh_eig = to_eigenbasis(dec, dh);
  const Eigen::Index d = dec.dim();

  const double coupling_cut = kCouplingCutoff * hs_norm(dh.matrix());
  const double weight_cut = coupling_cut * coupling_cut;

  SpectralFunction spec;
  spec.ground_only = ground_only;
  if (ground_only) {
    for (Eigen::Index m = 1; m < d; ++m) {
      const double w = std::norm(dh_eig(m, 0));
      if (w <= weight_cut) continue;
      const double omega = dec.eigenvalues(m) - dec.eigenvalues(0);
      spec.lines.push_back({omega, w});
      spec.lines.push_back({-omega, w});
    }
  } else {
    for (Eigen::Index m = 0; m < d; ++m) {
      for (Eigen::Index n = 0; n < d; ++n) {
        if (m == n) continue;
        const double w = std::norm(dh_eig(m, n));
        if (w <= weight_cut) continue;
        spec.lines.push_back({dec.eigenvalues(m) - dec.eigenvalues(n), w});
      }
    }
  }
  if (spec.lines.empty()) {
    throw std::domain_error("spectral_function: empty support, dh couples no pair of states");
  }
  spec.delta_min = std::numeric_limits<double>::infinity();
  spec.delta_max = 0.0;
  for (const auto& line : spec.lines) {
    spec.delta_min = std::min(spec.delta_min, std::abs(line.omega));
    spec.delta_max = std::max(spec.delta_max, std::abs(line.omega));
  }
  return spec;
}

double max_gap_from_ground(const SpectralDecomposition& dec) {
  return dec.eigenvalues(dec.dim() - 1) - dec.eigenvalues(0);
}

HermitianOperator effective_generator(const HermitianOperator& h, const HermitianOperator& dh,
                                      const AngleSchedule& sched) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("effective_generator: dimension mismatch");
  }
  if (sched.terms() == 0) {
    throw std::invalid_argument("effective_generator: schedule is empty");
  }
  const SpectralDecomposition dec = eigendecompose(h);
  const ComplexMatrix dh_eig = to_eigenbasis(dec, dh);
  const Eigen::Index d = dec.dim();

  ComplexMatrix v_eig = ComplexMatrix::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      if (m == n) continue;
      const double omega_mn = dec.eigenvalues(m) - dec.eigenvalues(n);
      v_eig(m, n) = std::complex<double>(0.0, 1.0) * dh_eig(m, n) * kernel_sum(sched, omega_mn);
    }
  }
  return HermitianOperator(dec.eigenvectors * v_eig * dec.eigenvectors.adjoint());
}

double agp_distance(const SpectralFunction& spec, const AngleSchedule& sched) {
  double total = 0.0;
  for (const auto& line : spec.lines) {
    if (line.omega == 0.0) {
      throw std::domain_error("agp_distance: zero-frequency line present");
    }
    const double k = 1.0 / line.omega + kernel_sum(sched, line.omega);
    total += line.weight * k * k;
  }
  return total;
}

std::vector<double> kernel_curve(const AngleSchedule& sched, const std::vector<double>& omegas,
                                 bool regularized) {
  double eta = 0.0;
  if (regularized) {
    if (!sched.eta()) {
      throw std::invalid_argument("kernel_curve: regularized kernel needs a schedule with eta");
    }
    eta = *sched.eta();
  }
  std::vector<double> values;
  values.reserve(omegas.size());
  for (const double omega : omegas) {
    double g;
    if (regularized && eta > 0.0) {
      g = omega / (omega * omega + eta * eta);
    } else {
      if (omega == 0.0) {
        throw std::domain_error("kernel_curve: omega = 0 without regularization");
      }
      g = 1.0 / omega;
    }
    const double k = g + kernel_sum(sched, omega);
    values.push_back(k * k);
  }
  return values;
}

TruncatedAgpFit fit_truncated_agp(const SpectralFunction& spec, int order) {
  if (order < 1) {
    throw std::invalid_argument("fit_truncated_agp: order must be >= 1");
  }
  if (spec.lines.empty()) {
    throw std::domain_error("fit_truncated_agp: empty spectral support");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(spec.lines.size());
  Eigen::MatrixXd design(rows, order);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double omega = spec.lines[static_cast<std::size_t>(i)].omega;
    const double sw = std::sqrt(spec.lines[static_cast<std::size_t>(i)].weight);
    double mono = omega;  // omega^(2l-1), starting at l = 1
    for (int l = 0; l < order; ++l) {
      design(i, l) = sw * mono;
      mono *= omega * omega;
    }
    rhs(i) = -sw / omega;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  const Eigen::VectorXd alpha = svd.solve(rhs);

  TruncatedAgpFit fit;
  fit.order = order;
  fit.alphas.assign(alpha.data(), alpha.data() + alpha.size());

  double residual = 0.0;
  for (const auto& line : spec.lines) {
    double poly = 0.0;
    double mono = line.omega;
    for (int l = 0; l < order; ++l) {
      poly += fit.alphas[static_cast<std::size_t>(l)] * mono;
      mono *= line.omega * line.omega;
    }
    const double k = 1.0 / line.omega + poly;
    residual += line.weight * k * k;
  }
  fit.residual = residual;
  return fit;
}

HermitianOperator truncated_agp_operator(const HermitianOperator& h,
                                         const HermitianOperator& dh,
                                         const TruncatedAgpFit& fit) {
  if (h.dim() != dh.dim()) {
    throw std::invalid_argument("truncated_agp_operator: dimension mismatch");
  }
  const Eigen::Index d = h.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  ComplexMatrix nested = dh.matrix();
  int applied = 0;
  for (int l = 1; l <= fit.order; ++l) {
    while (applied < 2 * l - 1) {
      nested = commutator(h.matrix(), nested);
      ++applied;
    }
    sum += fit.alphas[static_cast<std::size_t>(l - 1)] * nested;
  }
  return HermitianOperator(std::complex<double>(0.0, 1.0) * sum);
}

}  // namespace cdd
