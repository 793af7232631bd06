// schedule.hpp — rotation-angle schedules for the composite drive: the sine
// integral, closed-form standard angles, regularized angles via quadrature,
// period prediction, and gate-cost estimates.

#pragma once

#include <optional>
#include <vector>

namespace cdd {

struct AnglePair {
  double theta = 0.0;
  double phi = 0.0;
};

// Angle schedule for k = 1..K with theta_k = k*pi/Omega. Entries for negative
// k are defined by odd symmetry, theta_{-k} = -theta_k and phi_{-k} = -phi_k,
// and are exposed through pair(). K = 0 (no pairs) is allowed and describes
// an empty drive.
class AngleSchedule {
 public:
  // phis[i] is phi_{i+1}; theta_k is derived from omega.
  AngleSchedule(double omega, double delta_lambda, std::vector<double> phis,
                std::optional<double> eta = std::nullopt);

  int terms() const { return static_cast<int>(pairs_.size()); }
  double omega() const { return omega_; }
  double delta_lambda() const { return delta_lambda_; }
  const std::optional<double>& eta() const { return eta_; }
  const std::vector<AnglePair>& pairs() const { return pairs_; }

  // Signed lookup: k in -K..-1, 1..K.
  AnglePair pair(int k) const;

 private:
  double omega_;
  double delta_lambda_;
  std::optional<double> eta_;
  std::vector<AnglePair> pairs_;
};

struct ComplexityReport {
  double h_term = 0.0;
  double dh_term = 0.0;
  double total = 0.0;
};

// Si(x) = integral_0^x sin(y)/y dy. Odd; absolute accuracy ~1e-12.
// Maclaurin series for |x| <= 4, composite adaptive Simpson beyond.
double sine_integral(double x);

// theta_k = k*pi/Omega, phi_k = -(2*delta_lambda/Omega) * Si(k*pi), k = 1..K.
AngleSchedule standard_angles(int k_count, double omega, double delta_lambda);

// phi_k = -(2*delta_lambda/Omega) * integral_0^Omega [w/(w^2+eta^2)] sin(k*pi*w/Omega) dw.
// Reduces to standard_angles at eta = 0.
AngleSchedule regularized_angles(int k_count, double omega, double delta_lambda, double eta);

// Period of the infidelity oscillation in K: Omega / delta_min.
double period_prediction(double omega, double delta_min);

// Gate cost of the merged composite sequence: sum over factors of
// |angle| * generator norm. The H part telescopes to 4*K*pi/Omega * h_norm;
// the dH part is sum_k |phi_k| * dh_norm.
ComplexityReport complexity_estimate(const AngleSchedule& sched, double h_norm, double dh_norm);

}  // namespace cdd
