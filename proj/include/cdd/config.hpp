// config.hpp — flat key-value run configuration: parsing, validation, and
// serialization. One `key = value` per line, `#` starts a comment.

#pragma once

#include "cdd/drive.hpp"
#include "cdd/hamiltonians.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace cdd {

enum class ModelKind { two_level, lmg };

// Cutoff specification: a positive number, or `auto` which resolves to the
// maximum gap from the ground state at run time.
struct OmegaSpec {
  bool auto_max = true;
  double value = 0.0;
};

// Regularization: a plain number, or `<f>*delta_min` resolved against the
// ground-state spectral function.
struct EtaSpec {
  bool fraction_of_delta_min = false;
  double value = 0.0;
};

struct RunConfig {
  ModelKind model = ModelKind::lmg;

  // lmg parameters
  int n_spins = 10;
  double j0 = -1.0;
  double hx0 = 1.0;

  // two_level affine field schedules
  Affine hx;
  Affine hz;

  double lambda = 0.0;
  double delta_lambda = 0.0;
  OmegaSpec omega;
  std::optional<int> k;      // a single K (gates, single-point runs)
  std::optional<int> k_max;  // sweep upper bound
  std::optional<EtaSpec> eta;
  bool merge = true;
  Ordering ordering = Ordering::ascending;
  std::string out;  // output path; empty writes to stdout
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse and validate. Errors carry the offending key and line number.
RunConfig parse_config(std::istream& in);
RunConfig parse_config(const std::string& text);

// Emit a document that parses back to the same configuration.
std::string serialize_config(const RunConfig& config);

// Instantiate the configured model.
std::unique_ptr<ParametrizedHamiltonian> make_model(const RunConfig& config);

}  // namespace cdd
