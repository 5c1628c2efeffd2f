#pragma once

#include <Eigen/Core>

#include "rlw/grid.hpp"
#include "rlw/model.hpp"
#include "rlw/spectral.hpp"

namespace rlw {

enum class SolverMode { DirectDense, Krylov };

struct SolverConfig {
  SolverMode mode = SolverMode::Krylov;
  double rel_tol = 1e-12;
  int max_iters = 500;
  double startup_tol = 1e-13;
  int startup_max_iters = 100;
};

void validate(const SolverConfig& cfg);

struct SolveResult {
  GridFunction x;
  double rel_residual = 0.0;  // measured ||rhs - A x|| / ||rhs||
  int iterations = 0;
};

// Applies the per-step system matrix: [I - sigma D_2 + alpha D(w)] x.
GridFunction apply_system(const RlwParams& params, const SpectralOperators& ops,
                          const GridFunction& w, double alpha, const GridFunction& x);

// Dense assembly of the same matrix.
Eigen::MatrixXd assemble_system(const RlwParams& params, const SpectralOperators& ops,
                                const GridFunction& w, double alpha);

// Solves [I - sigma D_2 + alpha D(w)] x = rhs to rel_tol. Krylov mode runs
// restarted GMRES, right-preconditioned by (I - sigma D_2)^{-1} applied
// diagonally in Fourier space; the dense mode factorizes with LU and refines.
// Throws SolverError when the requested residual is out of reach.
SolveResult solve_linear(const RlwParams& params, const SpectralOperators& ops,
                         const GridFunction& w, double alpha, const GridFunction& rhs,
                         const SolverConfig& cfg);

}  // namespace rlw
