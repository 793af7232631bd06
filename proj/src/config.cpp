#include "cdd/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace cdd {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  auto end = s.find_last_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config error (line " + std::to_string(line) + "): " + what);
}

double parse_number(const std::string& value, const std::string& key, int line) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x)) {
    fail(line, "key '" + key + "' expects a number, got '" + v + "'");
  }
  return x;
}

int parse_int(const std::string& value, const std::string& key, int line) {
  const double x = parse_number(value, key, line);
  const int i = static_cast<int>(std::llround(x));
  if (static_cast<double>(i) != x) {
    fail(line, "key '" + key + "' expects an integer, got '" + trim(value) + "'");
  }
  return i;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(line, "key '" + key + "' expects a boolean, got '" + v + "'");
}

EtaSpec parse_eta(const std::string& value, int line) {
  const std::string v = trim(value);
  const auto star = v.find('*');
  if (star != std::string::npos) {
    const std::string tail = trim(v.substr(star + 1));
    if (tail != "delta_min") {
      fail(line, "key 'eta' expects a number or '<f>*delta_min', got '" + v + "'");
    }
    EtaSpec eta;
    eta.fraction_of_delta_min = true;
    eta.value = parse_number(v.substr(0, star), "eta", line);
    if (eta.value < 0.0) fail(line, "eta fraction must be non-negative");
    return eta;
  }
  EtaSpec eta;
  eta.value = parse_number(v, "eta", line);
  if (eta.value < 0.0) fail(line, "eta must be non-negative");
  return eta;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::set<std::string> seen;
  bool model_seen = false, lambda_seen = false, dl_seen = false, omega_seen = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "missing key before '='");
    if (value.empty()) fail(line_no, "missing value for key '" + key + "'");
    if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");

    if (key == "model") {
      if (value == "two_level") {
        config.model = ModelKind::two_level;
      } else if (value == "lmg") {
        config.model = ModelKind::lmg;
      } else {
        fail(line_no, "key 'model' expects 'two_level' or 'lmg', got '" + value + "'");
      }
      model_seen = true;
    } else if (key == "n_spins") {
      config.n_spins = parse_int(value, key, line_no);
      if (config.n_spins < 1) fail(line_no, "n_spins must be >= 1");
    } else if (key == "j0") {
      config.j0 = parse_number(value, key, line_no);
    } else if (key == "hx0") {
      config.hx0 = parse_number(value, key, line_no);
    } else if (key == "hx_offset") {
      config.hx.offset = parse_number(value, key, line_no);
    } else if (key == "hx_slope") {
      config.hx.slope = parse_number(value, key, line_no);
    } else if (key == "hz_offset") {
      config.hz.offset = parse_number(value, key, line_no);
    } else if (key == "hz_slope") {
      config.hz.slope = parse_number(value, key, line_no);
    } else if (key == "lambda") {
      config.lambda = parse_number(value, key, line_no);
      lambda_seen = true;
    } else if (key == "delta_lambda") {
      config.delta_lambda = parse_number(value, key, line_no);
      if (config.delta_lambda == 0.0) fail(line_no, "delta_lambda must be nonzero");
      dl_seen = true;
    } else if (key == "omega") {
      if (value == "auto") {
        config.omega.auto_max = true;
      } else {
        config.omega.auto_max = false;
        config.omega.value = parse_number(value, key, line_no);
        if (!(config.omega.value > 0.0)) fail(line_no, "explicit omega must be positive");
      }
      omega_seen = true;
    } else if (key == "k") {
      config.k = parse_int(value, key, line_no);
      if (*config.k < 1) fail(line_no, "k must be >= 1");
    } else if (key == "k_max") {
      config.k_max = parse_int(value, key, line_no);
      if (*config.k_max < 1) fail(line_no, "k_max must be >= 1");
    } else if (key == "eta") {
      config.eta = parse_eta(value, line_no);
    } else if (key == "merge") {
      config.merge = parse_bool(value, key, line_no);
    } else if (key == "ordering") {
      if (value == "ascending") {
        config.ordering = Ordering::ascending;
      } else if (value == "descending") {
        config.ordering = Ordering::descending;
      } else {
        fail(line_no, "key 'ordering' expects 'ascending' or 'descending', got '" + value + "'");
      }
    } else if (key == "out") {
      config.out = value;
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (!model_seen) throw ConfigError("config error: missing required key 'model'");
  if (!lambda_seen) throw ConfigError("config error: missing required key 'lambda'");
  if (!dl_seen) throw ConfigError("config error: missing required key 'delta_lambda'");
  if (!omega_seen) throw ConfigError("config error: missing required key 'omega'");
  if (!config.k && !config.k_max) {
    throw ConfigError("config error: one of 'k' or 'k_max' is required");
  }
  if (config.model == ModelKind::two_level) {
    const double hx = config.hx.value(config.lambda);
    const double hz = config.hz.value(config.lambda);
    if (hx == 0.0 && hz == 0.0) {
      throw ConfigError("config error: two_level fields vanish at lambda (degenerate point)");
    }
  }
  return config;
}

RunConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string serialize_config(const RunConfig& config) {
  std::ostringstream out;
  out.precision(17);
  out << "model = " << (config.model == ModelKind::two_level ? "two_level" : "lmg") << "\n";
  if (config.model == ModelKind::lmg) {
    out << "n_spins = " << config.n_spins << "\n";
    out << "j0 = " << config.j0 << "\n";
    out << "hx0 = " << config.hx0 << "\n";
  } else {
    out << "hx_offset = " << config.hx.offset << "\n";
    out << "hx_slope = " << config.hx.slope << "\n";
    out << "hz_offset = " << config.hz.offset << "\n";
    out << "hz_slope = " << config.hz.slope << "\n";
  }
  out << "lambda = " << config.lambda << "\n";
  out << "delta_lambda = " << config.delta_lambda << "\n";
  if (config.omega.auto_max) {
    out << "omega = auto\n";
  } else {
    out << "omega = " << config.omega.value << "\n";
  }
  if (config.k) out << "k = " << *config.k << "\n";
  if (config.k_max) out << "k_max = " << *config.k_max << "\n";
  if (config.eta) {
    out << "eta = " << config.eta->value;
    if (config.eta->fraction_of_delta_min) out << "*delta_min";
    out << "\n";
  }
  out << "merge = " << (config.merge ? "true" : "false") << "\n";
  out << "ordering = "
      << (config.ordering == Ordering::ascending ? "ascending" : "descending") << "\n";
  if (!config.out.empty()) out << "out = " << config.out << "\n";
  return out.str();
}

std::unique_ptr<ParametrizedHamiltonian> make_model(const RunConfig& config) {
  if (config.model == ModelKind::two_level) {
    return std::make_unique<TwoLevelModel>(config.hx, config.hz);
  }
  return std::make_unique<LMGModel>(config.n_spins, config.j0, config.hx0);
}

}  // namespace cdd
