#include "rlw/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "rlw/errors.hpp"

namespace rlw {

int Scenario::n_steps() const {
  if (!(tau > 0.0) || !(t_final > 0.0)) {
    throw ConfigError("tau and t_final must be positive");
  }
  const long long n = std::llround(t_final / tau);
  if (n < 1 || std::abs(n * tau - t_final) > 1e-9 * std::max(1.0, std::abs(t_final))) {
    throw ConfigError("tau must divide t_final into a whole number of steps");
  }
  return static_cast<int>(n);
}

void validate(const Scenario& s) {
  validate(s.params);
  validate(s.solver);
  if (!s.ic.has_value()) throw ConfigError("scenario has no initial condition");
  if (!(s.x_right > s.x_left)) throw ConfigError("scenario domain is empty");
  if (s.n_points < 4 || s.n_points % 2 != 0) {
    throw ConfigError("scenario n_points must be even and at least 4");
  }
  if (s.record_every < 1) throw ConfigError("record_every must be >= 1");
  (void)s.n_steps();
}

ErrorReport error_norms(const GridFunction& numeric, const ExactEvaluator& exact,
                        const Grid& grid, double t) {
  if (!exact) throw ConfigError("no exact evaluator supplied");
  if (numeric.size() != grid.n_points) throw ShapeError("state does not match the grid");
  ErrorReport report;
  report.at_time = t;
  double sq = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    const double diff = exact(grid.nodes[j], t) - numeric[j];
    sq += diff * diff;
    report.linf_error = std::max(report.linf_error, std::abs(diff));
  }
  report.l2_error = std::sqrt(grid.h * sq);
  return report;
}

ScenarioResult run_scenario(const Scenario& s) {
  validate(s);
  ScenarioResult result;
  result.scenario = s;
  result.grid = make_grid(s.x_left, s.x_right, s.n_points);
  SpectralOperators ops(result.grid);
  const GridFunction u0 = initial_profile(*s.ic, result.grid);
  const int n_steps = s.n_steps();

  InvariantRecord initial;
  auto observer = [&](int step, double time, const GridFunction& state) {
    InvariantRecord rec = compute_invariants(s.params, ops, state, time);
    if (step == 0) initial = rec;
    if (step % s.record_every != 0 && step != n_steps) return;
    result.snapshot_times.push_back(time);
    result.snapshots.push_back(state);
    result.invariants.push_back(rec);
    result.drifts.push_back(relative_drift(rec, initial));
    if (s.exact_available && s.exact) {
      result.errors.push_back(error_norms(state, s.exact, result.grid, time));
    }
  };

  const auto start = std::chrono::steady_clock::now();
  integrate(u0, s.params, ops, s.scheme, s.tau, n_steps, s.solver, observer);
  result.cpu_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<double> default_refinements(RefinementAxis axis) {
  if (axis == RefinementAxis::Time) return {0.1, 0.05, 0.025, 0.0125, 0.00625};
  std::vector<double> ns;
  for (int n = 32; n <= 64; n += 4) ns.push_back(n);
  return ns;
}

double observed_order(double error1, double error2, double delta1, double delta2) {
  return std::log(error1 / error2) / std::log(delta1 / delta2);
}

ConvergenceTable convergence_study(const Scenario& base, RefinementAxis axis,
                                   const std::vector<double>& refinements) {
  if (!base.exact_available || !base.exact) {
    throw ConfigError("convergence study needs a scenario with an exact solution");
  }
  if (refinements.empty()) throw ConfigError("empty refinement list");

  ConvergenceTable table;
  table.axis = axis;
  const auto floor12 = [](double e) { return std::max(e, 1e-12); };

  for (double r : refinements) {
    Scenario s = base;
    if (axis == RefinementAxis::Time) {
      s.tau = r;
    } else {
      s.n_points = static_cast<int>(std::llround(r));
    }
    validate(s);

    const Grid grid = make_grid(s.x_left, s.x_right, s.n_points);
    SpectralOperators ops(grid);
    const GridFunction u0 = initial_profile(*s.ic, grid);
    const GridFunction u_final =
        integrate(u0, s.params, ops, s.scheme, s.tau, s.n_steps(), s.solver);
    const ErrorReport err = error_norms(u_final, s.exact, grid, s.t_final);

    ConvergenceRow row;
    row.delta = (axis == RefinementAxis::Time) ? s.tau : grid.h;
    row.l2_error = err.l2_error;
    row.linf_error = err.linf_error;
    row.order_l2 = std::numeric_limits<double>::quiet_NaN();
    row.order_linf = std::numeric_limits<double>::quiet_NaN();
    if (!table.rows.empty()) {
      const ConvergenceRow& prev = table.rows.back();
      row.order_l2 =
          observed_order(floor12(prev.l2_error), floor12(row.l2_error), prev.delta, row.delta);
      row.order_linf =
          observed_order(floor12(prev.linf_error), floor12(row.linf_error), prev.delta, row.delta);
    }
    table.rows.push_back(row);
  }
  return table;
}

int count_peaks(const GridFunction& u, double min_height, double min_prominence) {
  const int n = static_cast<int>(u.size());
  int count = 0;
  for (int j = 1; j + 1 < n; ++j) {
    if (!(u[j] > u[j - 1] && u[j] > u[j + 1])) continue;
    if (!(u[j] > min_height)) continue;
    double left_min = u[j];
    for (int i = j - 1; i >= 0 && u[i] <= u[j]; --i) left_min = std::min(left_min, u[i]);
    double right_min = u[j];
    for (int i = j + 1; i < n && u[i] <= u[j]; ++i) right_min = std::min(right_min, u[i]);
    if (u[j] - std::max(left_min, right_min) >= min_prominence) ++count;
  }
  return count;
}

namespace {

Scenario soliton_scenario(const std::string& name, double c, double x_left, double x_right,
                          int n_points, double tau, double t_final, int record_every,
                          bool with_exact, double rel_tol) {
  Scenario s;
  s.name = name;
  s.params = RlwParams{1.0, 1.0, 1.0};
  SolitonSpec spec{c, 0.0};
  s.ic = InitialCondition::single_soliton(s.params, spec);
  s.x_left = x_left;
  s.x_right = x_right;
  s.n_points = n_points;
  s.tau = tau;
  s.t_final = t_final;
  s.record_every = record_every;
  s.solver.rel_tol = rel_tol;
  s.exact_available = with_exact;
  if (with_exact) {
    const RlwParams params = s.params;
    s.exact = [params, spec](double x, double t) { return exact_soliton(params, spec, x, t); };
  }
  return s;
}

Scenario maxwellian_scenario(const std::string& name, double sigma) {
  Scenario s;
  s.name = name;
  s.params = RlwParams{1.0, sigma, 1.0};
  s.ic = InitialCondition::maxwellian(s.params, MaxwellianSpec{7.0});
  s.x_left = -40.0;
  s.x_right = 100.0;
  s.n_points = 1400;
  s.tau = 0.01;
  s.t_final = 40.0;
  s.record_every = 1000;
  s.solver.rel_tol = 1e-13;
  return s;
}

}  // namespace

Scenario preset_scenario(const std::string& name, Scheme scheme) {
  // The Krylov residual floor grows like eps*(1 + sigma*(pi/h)^2); the
  // large-N presets ask for 1e-12, the rest can afford 1e-13.
  Scenario s;
  if (name == "propagation") {
    s = soliton_scenario(name, 1.0 / 3.0, -30.0, 30.0, 256, 1e-3, 6.0, 1000, true, 1e-13);
  } else if (name == "conservation") {
    s = soliton_scenario(name, 1.0 / 3.0, -30.0, 30.0, 256, 0.025, 100.0, 40, false, 1e-13);
  } else if (name == "accuracy_time") {
    s = soliton_scenario(name, 1.5, -30.0, 30.0, 1024, 0.1, 1.0, 10, true, 1e-12);
  } else if (name == "accuracy_space") {
    s = soliton_scenario(name, 1.5, -30.0, 30.0, 32, 1e-4, 1.0, 1000, true, 1e-13);
  } else if (name == "table2_c13") {
    s = soliton_scenario(name, 1.0 / 3.0, -60.0, 200.0, 2600, 0.05, 75.0, 500, true, 1e-12);
  } else if (name == "table2_c12") {
    s = soliton_scenario(name, 0.5, -60.0, 200.0, 2600, 0.05, 75.0, 500, true, 1e-12);
  } else if (name == "table3_c010") {
    s = soliton_scenario(name, 0.1, -60.0, 200.0, 2600, 0.05, 100.0, 500, true, 1e-12);
  } else if (name == "table3_c003") {
    s = soliton_scenario(name, 0.03, -60.0, 200.0, 2600, 0.05, 100.0, 500, true, 1e-12);
  } else if (name == "two_soliton") {
    s.name = name;
    s.params = RlwParams{1.0, 1.0, 1.0};
    s.ic = InitialCondition::two_soliton(s.params, TwoSolitonSpec{1.0, 0.5, -20.0, 15.0});
    s.x_left = -60.0;
    s.x_right = 280.0;
    s.n_points = 3400;
    s.tau = 0.05;
    s.t_final = 140.0;
    s.record_every = 400;
    s.solver.rel_tol = 1e-12;
  } else if (name == "maxwellian_s004") {
    s = maxwellian_scenario(name, 0.04);
  } else if (name == "maxwellian_s001") {
    s = maxwellian_scenario(name, 0.01);
  } else if (name == "maxwellian_s0001") {
    s = maxwellian_scenario(name, 0.001);
  } else {
    throw ConfigError("unknown scenario preset '" + name + "'");
  }
  s.scheme = scheme;
  return s;
}

std::vector<std::string> preset_names() {
  return {"propagation",  "conservation",    "accuracy_time",   "accuracy_space",
          "table2_c13",   "table2_c12",      "table3_c010",     "table3_c003",
          "two_soliton",  "maxwellian_s004", "maxwellian_s001", "maxwellian_s0001"};
}

}  // namespace rlw
