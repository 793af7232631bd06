// runner.hpp — experiment orchestration on top of a RunConfig: parameter
// resolution, the K sweep and kernel tables, schedule dumps, gate-sequence
// export and re-import, and the two-level exactness report.

#pragma once

#include "cdd/config.hpp"
#include "cdd/csv.hpp"
#include "cdd/drive.hpp"

#include <string>
#include <vector>

namespace cdd {

// Cutoff, gap bounds, and regularization resolved against the model at the
// configured lambda.
struct ResolvedParameters {
  double omega = 0.0;
  double delta_min = 0.0;
  double delta_max_support = 0.0;  // largest gap carrying spectral weight
  double max_gap = 0.0;            // E_max - E_0, the auto cutoff
  std::optional<double> eta;
  double predicted_period = 0.0;   // omega / delta_min
};

ResolvedParameters resolve_parameters(const RunConfig& config);

// Infidelity vs K table (columns: K, infidelity, [infidelity_regularized],
// quench_infidelity, predicted_half_period_multiples, complexity_total).
CsvTable run_sweep(const RunConfig& config);

struct KernelGrid {
  std::vector<int> k_list = {4, 8, 13, 17};
  int points = 400;
  double omega_max = 0.0;  // 0 means the resolved cutoff
  bool regularized = false;
};

// Deviation-kernel curves over an omega grid, one column per K.
CsvTable run_kernel(const RunConfig& config, const KernelGrid& grid);

// Schedule dump (columns: k, theta_k, phi_k) for K = config.k or k_max.
CsvTable run_angles(const RunConfig& config);

// Complexity table for K = 1..k_max (or the single configured k).
CsvTable run_complexity(const RunConfig& config);

// Plain-text gate IR: header comments, then one `EXPH <angle>` or
// `EXPDH <angle>` line per step in application order.
std::string export_gates(const RunConfig& config);

// Parse the IR back into a sequence (comments ignored).
GateSequence parse_gate_ir(const std::string& text);

// Two-level exactness checks; each line reports a named check, its measured
// value, and PASS/FAIL. Returns false if any check failed.
bool twolevel_check(const RunConfig& config, std::string& report);

}  // namespace cdd
