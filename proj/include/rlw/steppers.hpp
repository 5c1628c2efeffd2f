#pragma once

#include <functional>

#include "rlw/grid.hpp"
#include "rlw/linear_solver.hpp"
#include "rlw/model.hpp"
#include "rlw/spectral.hpp"

namespace rlw {

// Both integrators advance one linear solve per step and conserve the
// discrete momentum ||U||_h^2 + sigma |U|_h^2 exactly in the algebra:
//
//   lcn: (I - sigma D_2) (U^{n+1}-U^n)/tau + D((3U^n-U^{n-1})/2) (U^{n+1}+U^n)/2 = 0
//   llf: (I - sigma D_2) (U^{n+1}-U^{n-1})/(2 tau) + D(U^n) (U^{n+1}+U^{n-1})/2 = 0
enum class Scheme { LcnMp, LlfMp };

// Single-owner stepping state: two rolling history levels. Distinct runs may
// execute in parallel over shared SpectralOperators; one run must not.
struct SchemeRun {
  Scheme scheme = Scheme::LcnMp;
  double tau = 0.0;
  int n_steps = 0;
  GridFunction previous;  // U^{n-1}
  GridFunction current;   // U^n
  int step_index = 0;     // n
  SolverConfig solver;
};

// Nonlinear Crank-Nicolson startup: solves
//   (I - sigma D_2)(U^1 - U^0)/tau + D(U^{1/2}) U^{1/2} = 0,  U^{1/2} = (U^0+U^1)/2
// for U^1 by Picard iteration with frozen-coefficient linear solves.
GridFunction startup_step(const GridFunction& u0, const RlwParams& params,
                          const SpectralOperators& ops, double tau, const SolverConfig& cfg);

// One step of each scheme; advances run.history and returns U^{n+1}.
GridFunction lcn_step(SchemeRun& run, const RlwParams& params, const SpectralOperators& ops);
GridFunction llf_step(SchemeRun& run, const RlwParams& params, const SpectralOperators& ops);

using StepObserver = std::function<void(int step, double time, const GridFunction& state)>;

// Startup step followed by n_steps-1 scheme steps; the observer sees every
// level including step 0. Failures re-throw with the step index attached.
GridFunction integrate(const GridFunction& u0, const RlwParams& params,
                       const SpectralOperators& ops, Scheme scheme, double tau, int n_steps,
                       const SolverConfig& cfg, const StepObserver& observer = {});

}  // namespace rlw
