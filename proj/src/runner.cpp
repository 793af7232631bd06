#include "cdd/runner.hpp"

#include <cmath>
#include <sstream>

namespace cdd {

namespace {

AngleSchedule build_schedule(int k_terms, double omega, double delta_lambda,
                             const std::optional<double>& eta) {
  return eta ? regularized_angles(k_terms, omega, delta_lambda, *eta)
             : standard_angles(k_terms, omega, delta_lambda);
}

int sweep_upper(const RunConfig& config) {
  if (config.k_max) return *config.k_max;
  return *config.k;
}

std::string describe_model(const RunConfig& config) {
  std::ostringstream out;
  if (config.model == ModelKind::lmg) {
    out << "model = lmg, n_spins = " << config.n_spins << ", j0 = " << format_double(config.j0)
        << ", hx0 = " << format_double(config.hx0);
  } else {
    out << "model = two_level, hx = " << format_double(config.hx.offset) << " + "
        << format_double(config.hx.slope) << "*lambda, hz = "
        << format_double(config.hz.offset) << " + " << format_double(config.hz.slope)
        << "*lambda";
  }
  out << ", lambda = " << format_double(config.lambda)
      << ", delta_lambda = " << format_double(config.delta_lambda);
  return out.str();
}

std::vector<std::string> resolution_comments(const RunConfig& config,
                                             const ResolvedParameters& res) {
  std::vector<std::string> comments;
  comments.push_back(describe_model(config));
  comments.push_back("omega = " + format_double(res.omega) +
                     (config.omega.auto_max ? " (auto: max gap from ground state)" : ""));
  comments.push_back("delta_min = " + format_double(res.delta_min) +
                     ", delta_max_support = " + format_double(res.delta_max_support) +
                     ", max_gap = " + format_double(res.max_gap));
  comments.push_back("predicted_period K_p = " + format_double(res.predicted_period));
  if (res.eta) comments.push_back("eta = " + format_double(*res.eta));
  comments.push_back(std::string("ordering = ") +
                     (config.ordering == Ordering::ascending ? "ascending" : "descending"));
  return comments;
}

}  // namespace

ResolvedParameters resolve_parameters(const RunConfig& config) {
  const auto model = make_model(config);
  const HermitianOperator h = model->hamiltonian(config.lambda);
  const HermitianOperator dh = model->derivative(config.lambda);
  const SpectralDecomposition dec = eigendecompose(h);
  const SpectralFunction ground = spectral_function(h, dh, true);

  ResolvedParameters res;
  res.delta_min = ground.delta_min;
  res.delta_max_support = ground.delta_max;
  res.max_gap = max_gap_from_ground(dec);
  res.omega = config.omega.auto_max ? res.max_gap : config.omega.value;
  if (config.eta) {
    res.eta = config.eta->fraction_of_delta_min ? config.eta->value * res.delta_min
                                                : config.eta->value;
  }
  res.predicted_period = period_prediction(res.omega, res.delta_min);
  return res;
}

CsvTable run_sweep(const RunConfig& config) {
  const ResolvedParameters res = resolve_parameters(config);
  const auto model = make_model(config);
  const int k_max = sweep_upper(config);

  const SweepResult plain = sweep_k(*model, config.lambda, config.delta_lambda, res.omega,
                                    k_max, std::nullopt, config.ordering);
  std::optional<SweepResult> reg;
  if (res.eta) {
    reg = sweep_k(*model, config.lambda, config.delta_lambda, res.omega, k_max, res.eta,
                  config.ordering);
  }

  CsvTable table;
  table.comments = resolution_comments(config, res);
  table.header = {"K", "infidelity"};
  if (reg) table.header.push_back("infidelity_regularized");
  table.header.insert(table.header.end(),
                      {"quench_infidelity", "predicted_half_period_multiples",
                       "complexity_total"});
  for (int i = 0; i < k_max; ++i) {
    const DriveResult& row = plain.rows[static_cast<std::size_t>(i)];
    std::vector<double> out;
    out.push_back(static_cast<double>(row.k_terms));
    out.push_back(row.infidelity);
    if (reg) out.push_back(reg->rows[static_cast<std::size_t>(i)].infidelity);
    out.push_back(row.quench_infidelity);
    out.push_back(2.0 * row.k_terms / plain.predicted_period);
    out.push_back(row.complexity.total);
    table.rows.push_back(std::move(out));
  }
  return table;
}

CsvTable run_kernel(const RunConfig& config, const KernelGrid& grid) {
  if (grid.points < 2) {
    throw std::invalid_argument("run_kernel: grid needs at least two points");
  }
  const ResolvedParameters res = resolve_parameters(config);
  const double omega_hi = grid.omega_max > 0.0 ? grid.omega_max : res.omega;
  const bool regularized = grid.regularized;
  if (regularized && !res.eta) {
    throw std::invalid_argument("run_kernel: regularized grid needs eta in the config");
  }

  // (0, omega_hi] for the bare kernel; the regularized kernel is finite at 0
  std::vector<double> omegas;
  omegas.reserve(static_cast<std::size_t>(grid.points));
  for (int i = 0; i < grid.points; ++i) {
    const double t = static_cast<double>(i) / (grid.points - 1);
    const double lo = regularized ? 0.0 : omega_hi / grid.points;
    omegas.push_back(lo + t * (omega_hi - lo));
  }

  CsvTable table;
  table.comments = resolution_comments(config, res);
  table.header = {"omega"};
  std::vector<std::vector<double>> curves;
  for (const int k_terms : grid.k_list) {
    const AngleSchedule sched =
        build_schedule(k_terms, res.omega, config.delta_lambda,
                       regularized ? res.eta : std::nullopt);
    curves.push_back(kernel_curve(sched, omegas, regularized));
    table.header.push_back("kernel_K" + std::to_string(k_terms));
  }
  if (grid.k_list.empty()) {
    // bare 1/omega^2 (or regularized g^2) reference column
    const AngleSchedule empty(res.omega, config.delta_lambda, {}, res.eta);
    curves.push_back(kernel_curve(empty, omegas, regularized));
    table.header.push_back("kernel_bare");
  }
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    std::vector<double> row;
    row.push_back(omegas[i]);
    for (const auto& curve : curves) row.push_back(curve[i]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable run_angles(const RunConfig& config) {
  const ResolvedParameters res = resolve_parameters(config);
  const AngleSchedule sched =
      build_schedule(sweep_upper(config), res.omega, config.delta_lambda, res.eta);
  CsvTable table;
  table.comments = resolution_comments(config, res);
  table.header = {"k", "theta_k", "phi_k"};
  for (int k = 1; k <= sched.terms(); ++k) {
    const AnglePair p = sched.pair(k);
    table.rows.push_back({static_cast<double>(k), p.theta, p.phi});
  }
  return table;
}

CsvTable run_complexity(const RunConfig& config) {
  const ResolvedParameters res = resolve_parameters(config);
  const auto model = make_model(config);
  const double h_norm = hs_norm(model->hamiltonian(config.lambda).matrix());
  const double dh_norm = hs_norm(model->derivative(config.lambda).matrix());

  const int k_hi = sweep_upper(config);
  const int k_lo = config.k_max ? 1 : k_hi;

  CsvTable table;
  table.comments = resolution_comments(config, res);
  table.comments.push_back("h_norm = " + format_double(h_norm) +
                           ", dh_norm = " + format_double(dh_norm));
  table.header = {"K", "h_term", "dh_term", "total"};
  for (int k_terms = k_lo; k_terms <= k_hi; ++k_terms) {
    const AngleSchedule sched =
        build_schedule(k_terms, res.omega, config.delta_lambda, res.eta);
    const ComplexityReport rep = complexity_estimate(sched, h_norm, dh_norm);
    table.rows.push_back({static_cast<double>(k_terms), rep.h_term, rep.dh_term, rep.total});
  }
  return table;
}

std::string export_gates(const RunConfig& config) {
  if (!config.k) {
    throw ConfigError("export_gates: a single 'k' is required");
  }
  const ResolvedParameters res = resolve_parameters(config);
  const auto model = make_model(config);
  const double h_norm = hs_norm(model->hamiltonian(config.lambda).matrix());
  const double dh_norm = hs_norm(model->derivative(config.lambda).matrix());

  const AngleSchedule sched = build_schedule(*config.k, res.omega, config.delta_lambda, res.eta);
  const GateSequence seq = gate_sequence(sched, config.merge, config.ordering);
  const ComplexityReport rep = complexity_estimate(sched, h_norm, dh_norm);

  std::ostringstream out;
  out << "# composite drive gate sequence\n";
  out << "# " << describe_model(config) << "\n";
  out << "# K = " << *config.k << ", omega = " << format_double(res.omega)
      << ", delta_lambda = " << format_double(config.delta_lambda) << ", eta = "
      << (res.eta ? format_double(*res.eta) : std::string("none")) << "\n";
  out << "# ordering = "
      << (config.ordering == Ordering::ascending ? "ascending" : "descending")
      << ", merged = " << (config.merge ? "true" : "false") << "\n";
  out << "# complexity: h_term = " << format_double(rep.h_term)
      << ", dh_term = " << format_double(rep.dh_term)
      << ", total = " << format_double(rep.total) << "\n";
  out << "# EXPH a applies exp(-i a H); EXPDH a applies exp(-i a dH); top line first\n";
  for (const GateStep& step : seq.steps) {
    out << (step.generator == GateStep::Generator::H ? "EXPH " : "EXPDH ")
        << format_double(step.angle) << "\n";
  }
  return out.str();
}

GateSequence parse_gate_ir(const std::string& text) {
  GateSequence seq;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;
    GateStep step;
    if (op == "EXPH") {
      step.generator = GateStep::Generator::H;
    } else if (op == "EXPDH") {
      step.generator = GateStep::Generator::DH;
    } else {
      throw std::runtime_error("gate IR error (line " + std::to_string(line_no) +
                               "): unknown op '" + op + "'");
    }
    if (!(fields >> step.angle)) {
      throw std::runtime_error("gate IR error (line " + std::to_string(line_no) +
                               "): missing angle");
    }
    seq.steps.push_back(step);
  }
  return seq;
}

bool twolevel_check(const RunConfig& config, std::string& report) {
  if (config.model != ModelKind::two_level) {
    throw ConfigError("twolevel_check: config must describe a two_level model");
  }
  const TwoLevelModel model(config.hx, config.hz);
  const double lambda = config.lambda;
  const double delta = model.gap(lambda);
  const HermitianOperator h = model.hamiltonian(lambda);
  const HermitianOperator dh = model.derivative(lambda);
  const HermitianOperator agp = model.exact_agp(lambda);

  std::ostringstream out;
  bool ok = true;
  auto check = [&](const std::string& name, double value, double bound) {
    const bool pass = value <= bound;
    ok = ok && pass;
    out << (pass ? "PASS" : "FAIL") << "  " << name << " = " << format_double(value)
        << "  (bound " << format_double(bound) << ")\n";
  };

  // K = 1 schedule that reproduces the gauge potential exactly:
  // theta_1 = pi/(2 Delta), phi_1 = -delta_lambda/Delta
  const AngleSchedule exact(2.0 * delta, config.delta_lambda, {-config.delta_lambda / delta});

  const HermitianOperator v = effective_generator(h, dh, exact);
  const double agp_norm = hs_norm(agp.matrix());
  check("generator_vs_agp_rel_error",
        agp_norm > 0.0 ? hs_norm(v.matrix() - agp.matrix()) / agp_norm
                       : hs_norm(v.matrix() - agp.matrix()),
        1e-12);

  const SpectralFunction spec = spectral_function(h, dh, false);
  check("agp_distance", agp_distance(spec, exact), 1e-12);

  const double drive = drive_infidelity(model, lambda, exact, 0, config.ordering);
  const double quench = quench_infidelity(model, lambda, config.delta_lambda, 0);
  out << "INFO  drive_infidelity = " << format_double(drive)
      << ", quench_infidelity = " << format_double(quench) << "\n";
  check("drive_to_quench_ratio", quench > 0.0 ? drive / quench : drive, 1e-4);

  report = out.str();
  return ok;
}

}  // namespace cdd
