#pragma once

#include "rlw/grid.hpp"
#include "rlw/model.hpp"
#include "rlw/spectral.hpp"

namespace rlw {

// One time level of the discrete conserved functionals.
struct InvariantRecord {
  double time = 0.0;
  double mass_h = 0.0;      // I1h = h sum U_j
  double momentum_h = 0.0;  // I2h = ||U||_h^2 + sigma |U|_h^2
  double energy_h = 0.0;    // I3h = h sum (gamma U^3/6 + a U^2/2)
};

InvariantRecord compute_invariants(const RlwParams& params, const SpectralOperators& ops,
                                   const GridFunction& u, double t);

// Nodal-sum form h sum (U^2 - sigma U (D_2 U)); algebraically equal to
// momentum_h, kept as a cross-check route.
double momentum_nodal_sum(const RlwParams& params, const SpectralOperators& ops,
                          const GridFunction& u);

// Relative drifts |I(t) - I(0)| / |I(0)|. A zero initial functional downgrades
// that component to an absolute difference and sets the flag.
struct RelativeDrift {
  double ri1 = 0.0;
  double ri2 = 0.0;
  double ri3 = 0.0;
  bool absolute1 = false;
  bool absolute2 = false;
  bool absolute3 = false;
};

RelativeDrift relative_drift(const InvariantRecord& current, const InvariantRecord& initial);

// Closed-form momentum of the two-pulse initial data,
//   sum_i (6 c_i^2 / m_i + 24 m_i c_i^2 sigma / 5).
double analytic_two_soliton_momentum(const TwoSolitonSpec& spec, double sigma,
                                     double gamma = 1.0);

}  // namespace rlw
