#include "rlw/steppers.hpp"

#include <cstdio>
#include <string>

#include "rlw/errors.hpp"

namespace rlw {

GridFunction startup_step(const GridFunction& u0, const RlwParams& params,
                          const SpectralOperators& ops, double tau, const SolverConfig& cfg) {
  if (!u0.allFinite()) throw NumericsError("startup state contains non-finite entries");
  GridFunction v = u0;
  double increment = 0.0;
  for (int s = 0; s < cfg.startup_max_iters; ++s) {
    const GridFunction w = 0.5 * (u0 + v);
    const GridFunction rhs = apply_system(params, ops, w, -tau / 2.0, u0);
    SolveResult res = solve_linear(params, ops, w, tau / 2.0, rhs, cfg);
    increment = norm_h(ops.grid(), res.x - v);
    v = std::move(res.x);
    if (increment <= cfg.startup_tol * (1.0 + norm_h(ops.grid(), v))) return v;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", increment);
  throw StartupError("startup iteration did not converge (last increment " + std::string(buf) +
                         ")",
                     increment);
}

static void require_history(const SchemeRun& run, const SpectralOperators& ops) {
  if (run.step_index < 1) {
    throw ConfigError("stepping requires two populated history levels (run startup first)");
  }
  const int n = ops.grid().n_points;
  if (run.previous.size() != n || run.current.size() != n) {
    throw ShapeError("scheme history does not match the grid");
  }
}

GridFunction lcn_step(SchemeRun& run, const RlwParams& params, const SpectralOperators& ops) {
  require_history(run, ops);
  const GridFunction w_hat = 0.5 * (3.0 * run.current - run.previous);
  const double alpha = run.tau / 2.0;
  const GridFunction rhs = apply_system(params, ops, w_hat, -alpha, run.current);
  SolveResult res = solve_linear(params, ops, w_hat, alpha, rhs, run.solver);
  run.previous = std::move(run.current);
  run.current = std::move(res.x);
  ++run.step_index;
  return run.current;
}

GridFunction llf_step(SchemeRun& run, const RlwParams& params, const SpectralOperators& ops) {
  require_history(run, ops);
  const double alpha = run.tau;
  const GridFunction rhs = apply_system(params, ops, run.current, -alpha, run.previous);
  SolveResult res = solve_linear(params, ops, run.current, alpha, rhs, run.solver);
  run.previous = std::move(run.current);
  run.current = std::move(res.x);
  ++run.step_index;
  return run.current;
}

GridFunction integrate(const GridFunction& u0, const RlwParams& params,
                       const SpectralOperators& ops, Scheme scheme, double tau, int n_steps,
                       const SolverConfig& cfg, const StepObserver& observer) {
  validate(params);
  validate(cfg);
  if (!(tau > 0.0)) throw ConfigError("time step must be positive");
  if (n_steps < 1) throw ConfigError("need at least one time step");
  if (u0.size() != ops.grid().n_points) throw ShapeError("initial state does not match the grid");

  if (observer) observer(0, 0.0, u0);

  GridFunction u1;
  try {
    u1 = startup_step(u0, params, ops, tau, cfg);
  } catch (const StartupError& e) {
    throw StartupError("step 1: " + std::string(e.what()), e.last_increment);
  } catch (const SolverError& e) {
    throw SolverError("step 1: " + std::string(e.what()), e.residual, e.iterations);
  }
  if (observer) observer(1, tau, u1);

  SchemeRun run{scheme, tau, n_steps, u0, std::move(u1), 1, cfg};
  while (run.step_index < n_steps) {
    const int next = run.step_index + 1;
    try {
      if (scheme == Scheme::LcnMp) {
        lcn_step(run, params, ops);
      } else {
        llf_step(run, params, ops);
      }
    } catch (const SolverError& e) {
      throw SolverError("step " + std::to_string(next) + ": " + e.what(), e.residual,
                        e.iterations);
    }
    if (observer) observer(next, next * tau, run.current);
  }
  return run.current;
}

}  // namespace rlw
