#pragma once

#include <string>

#include "rlw/harness.hpp"

namespace rlw {

// Sectioned key-value description of one run. Sections: [model] a, sigma,
// gamma; [domain] x_left, x_right, n_points; [time] tau, t_final; [scheme]
// name, solver, tolerances; [initial] kind + parameters; [output] directory,
// record_every, emit_plots. Unknown sections or keys are rejected; only the
// solver tolerances carry defaults.
struct RunConfig {
  double a = 0.0;
  double sigma = 0.0;
  double gamma = 0.0;

  double x_left = 0.0;
  double x_right = 0.0;
  int n_points = 0;

  double tau = 0.0;
  double t_final = 0.0;

  std::string scheme_name;  // lcn_mp | llf_mp
  std::string solver_mode;  // krylov | direct_dense
  double rel_tol = 1e-12;
  int max_iters = 500;
  double startup_tol = 1e-13;
  int startup_max_iters = 100;

  std::string initial_kind;  // single_soliton | two_soliton | maxwellian
  double c = 0.0;
  double x0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double center = 0.0;

  std::string directory;
  int record_every = 1;
  bool emit_plots = false;

  Scenario make_scenario() const;
};

RunConfig parse_run_config(const std::string& text);
std::string serialize_run_config(const RunConfig& cfg);
RunConfig config_from_scenario(const Scenario& scenario, const std::string& directory,
                               bool emit_plots);

}  // namespace rlw
