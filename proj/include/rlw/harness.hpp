#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlw/grid.hpp"
#include "rlw/invariants.hpp"
#include "rlw/model.hpp"
#include "rlw/steppers.hpp"

namespace rlw {

using ExactEvaluator = std::function<double(double x, double t)>;

// One fully pinned experiment: model, initial data, discretization, scheme.
struct Scenario {
  std::string name;
  RlwParams params;
  std::optional<InitialCondition> ic;
  double x_left = 0.0;
  double x_right = 0.0;
  int n_points = 0;
  double tau = 0.0;
  double t_final = 0.0;
  Scheme scheme = Scheme::LcnMp;
  int record_every = 1;
  SolverConfig solver;
  bool exact_available = false;
  ExactEvaluator exact;

  // N_t with N_t * tau = t_final; throws unless tau divides t_final.
  int n_steps() const;
};

void validate(const Scenario& s);

struct ErrorReport {
  double l2_error = 0.0;
  double linf_error = 0.0;
  double at_time = 0.0;
};

// Discrete L2 / Linf error of a numeric state against the exact solution at t.
ErrorReport error_norms(const GridFunction& numeric, const ExactEvaluator& exact,
                        const Grid& grid, double t);

enum class RefinementAxis { Time, Space };

struct ConvergenceRow {
  double delta = 0.0;  // tau on the time axis, h on the space axis
  double l2_error = 0.0;
  double linf_error = 0.0;
  double order_l2 = 0.0;  // NaN on the first row
  double order_linf = 0.0;
};

struct ConvergenceTable {
  RefinementAxis axis = RefinementAxis::Time;
  std::vector<ConvergenceRow> rows;
};

// Everything a run produces, ready for CSV emission.
struct ScenarioResult {
  Scenario scenario;
  Grid grid;
  std::vector<double> snapshot_times;
  std::vector<GridFunction> snapshots;
  std::vector<InvariantRecord> invariants;
  std::vector<RelativeDrift> drifts;   // parallel to invariants
  std::vector<ErrorReport> errors;     // empty unless exact_available
  double cpu_seconds = 0.0;
};

ScenarioResult run_scenario(const Scenario& s);

// Order = log(error1/error2) / log(delta1/delta2).
double observed_order(double error1, double error2, double delta1, double delta2);

// Re-runs the base scenario over a refinement ladder and tabulates observed
// orders. Time axis entries are tau values; space axis entries are node
// counts. Errors are floored at 1e-12 before taking logs.
ConvergenceTable convergence_study(const Scenario& base, RefinementAxis axis,
                                   const std::vector<double>& refinements);

// Default refinement ladders: tau in {0.1,...,0.00625}, N in {32,36,...,64}.
std::vector<double> default_refinements(RefinementAxis axis);

// Local maxima above min_height whose prominence (height above the higher of
// the two flanking minima toward higher ground) reaches min_prominence.
int count_peaks(const GridFunction& u, double min_height, double min_prominence);

// Registry of the shipped experiment configurations.
Scenario preset_scenario(const std::string& name, Scheme scheme);
std::vector<std::string> preset_names();

}  // namespace rlw
