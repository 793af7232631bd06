#include "cdd/schedule.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace cdd {

namespace {

constexpr double kPi = std::numbers::pi;

// Recursive adaptive Simpson with the standard |S2 - S1|/15 error estimate.
double adaptive_simpson_step(const std::function<double(double)>& f, double a, double b,
                             double fa, double fm, double fb, double whole, double tol,
                             int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Composite rule: pre-split [a, b] into min_panels uniform panels (so that
// oscillatory integrands are resolved before refinement), then run adaptive
// Simpson on each panel with a proportional share of the tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int min_panels) {
  if (a == b) return 0.0;
  if (min_panels < 1) min_panels = 1;
  const double h = (b - a) / min_panels;
  const double panel_tol = tol / min_panels;
  double total = 0.0;
  for (int i = 0; i < min_panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = (i + 1 == min_panels) ? b : a + (i + 1) * h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0);
    const double fm = f(xm);
    const double f1 = f(x1);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += adaptive_simpson_step(f, x0, x1, f0, fm, f1, whole, panel_tol, 40);
  }
  return total;
}

// Maclaurin series, valid and fast for |x| <= 4:
// Si(x) = sum_{n>=0} (-1)^n x^(2n+1) / ((2n+1) (2n+1)!).
double sine_integral_series(double x) {
  double term = x;  // n = 0
  double sum = x;
  const double x2 = x * x;
  for (int n = 1; n < 60; ++n) {
    const int k = 2 * n + 1;
    term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
    const double contrib = term / k;  // term holds x^k / k!
    sum += contrib;
    if (std::abs(contrib) < 1e-16) break;
  }
  return sum;
}

double sinc(double y) { return y == 0.0 ? 1.0 : std::sin(y) / y; }

}  // namespace

double sine_integral(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("sine_integral: argument must be finite");
  }
  const double ax = std::abs(x);
  double result;
  if (ax <= 4.0) {
    result = sine_integral_series(ax);
  } else {
    static const double si4 = sine_integral_series(4.0);
    const int panels = static_cast<int>(std::ceil((ax - 4.0) / (kPi / 4.0)));
    result = si4 + adaptive_simpson(sinc, 4.0, ax, 1e-13, panels);
  }
  return x < 0.0 ? -result : result;
}

AngleSchedule::AngleSchedule(double omega, double delta_lambda, std::vector<double> phis,
                             std::optional<double> eta)
    : omega_(omega), delta_lambda_(delta_lambda), eta_(eta) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("AngleSchedule: omega must be positive");
  }
  if (delta_lambda == 0.0 || !std::isfinite(delta_lambda)) {
    throw std::invalid_argument("AngleSchedule: delta_lambda must be nonzero and finite");
  }
  if (eta && (*eta < 0.0 || !std::isfinite(*eta))) {
    throw std::invalid_argument("AngleSchedule: eta must be non-negative");
  }
  pairs_.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    pairs_.push_back({k * kPi / omega_, phis[i]});
  }
}

AnglePair AngleSchedule::pair(int k) const {
  const int abs_k = std::abs(k);
  if (k == 0 || abs_k > terms()) {
    throw std::out_of_range("AngleSchedule::pair: k must satisfy 1 <= |k| <= K");
  }
  AnglePair p = pairs_[static_cast<std::size_t>(abs_k - 1)];
  if (k < 0) {
    p.theta = -p.theta;
    p.phi = -p.phi;
  }
  return p;
}

AngleSchedule standard_angles(int k_count, double omega, double delta_lambda) {
  if (k_count < 1) {
    throw std::invalid_argument("standard_angles: K must be >= 1");
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("standard_angles: omega must be positive");
  }
  std::vector<double> phis(static_cast<std::size_t>(k_count));
  for (int k = 1; k <= k_count; ++k) {
    phis[static_cast<std::size_t>(k - 1)] =
        -(2.0 * delta_lambda / omega) * sine_integral(k * kPi);
  }
  return AngleSchedule(omega, delta_lambda, std::move(phis));
}

AngleSchedule regularized_angles(int k_count, double omega, double delta_lambda, double eta) {
  if (k_count < 1) {
    throw std::invalid_argument("regularized_angles: K must be >= 1");
  }
  if (!(omega > 0.0)) {
    throw std::invalid_argument("regularized_angles: omega must be positive");
  }
  if (eta < 0.0 || !std::isfinite(eta)) {
    throw std::invalid_argument("regularized_angles: eta must be non-negative");
  }
  std::vector<double> phis(static_cast<std::size_t>(k_count));
  for (int k = 1; k <= k_count; ++k) {
    const double freq = k * kPi / omega;
    auto integrand = [eta, freq](double w) {
      if (w == 0.0) {
        // limit of sin(freq*w)/w at eta = 0; for eta > 0 the kernel vanishes
        return eta == 0.0 ? freq : 0.0;
      }
      return w / (w * w + eta * eta) * std::sin(freq * w);
    };
    // at least 32 panels per oscillation period of sin(k*pi*w/Omega)
    const int panels = std::max(32, 16 * k);
    const double integral = adaptive_simpson(integrand, 0.0, omega, 1e-12, panels);
    phis[static_cast<std::size_t>(k - 1)] = -(2.0 * delta_lambda / omega) * integral;
  }
  return AngleSchedule(omega, delta_lambda, std::move(phis), eta);
}

double period_prediction(double omega, double delta_min) {
  if (!(omega > 0.0) || !(delta_min > 0.0)) {
    throw std::invalid_argument("period_prediction: omega and delta_min must be positive");
  }
  return omega / delta_min;
}

ComplexityReport complexity_estimate(const AngleSchedule& sched, double h_norm,
                                     double dh_norm) {
  if (h_norm < 0.0 || dh_norm < 0.0) {
    throw std::invalid_argument("complexity_estimate: norms must be non-negative");
  }
  ComplexityReport rep;
  // keep the K multiplication last so that doubling K doubles h_term exactly
  rep.h_term = (4.0 * kPi / sched.omega() * h_norm) * static_cast<double>(sched.terms());
  double phi_sum = 0.0;
  for (const auto& p : sched.pairs()) phi_sum += std::abs(p.phi);
  rep.dh_term = phi_sum * dh_norm;
  rep.total = rep.h_term + rep.dh_term;
  return rep;
}

}  // namespace cdd
