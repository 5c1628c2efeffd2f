#include "rlw/invariants.hpp"

#include <cmath>

namespace rlw {

InvariantRecord compute_invariants(const RlwParams& params, const SpectralOperators& ops,
                                   const GridFunction& u, double t) {
  const Grid& grid = ops.grid();
  const Norms n = norms(ops, u);
  InvariantRecord rec;
  rec.time = t;
  rec.mass_h = grid.h * u.sum();
  rec.momentum_h = n.l2_h * n.l2_h + params.sigma * n.seminorm_h * n.seminorm_h;
  rec.energy_h =
      grid.h * ((params.gamma / 6.0) * u.array().cube().sum() + (params.a / 2.0) * u.squaredNorm());
  return rec;
}

double momentum_nodal_sum(const RlwParams& params, const SpectralOperators& ops,
                          const GridFunction& u) {
  const GridFunction d2u = ops.derivative(u, 2);
  return ops.grid().h * (u.squaredNorm() - params.sigma * u.dot(d2u));
}

static void drift_component(double current, double initial, double& out, bool& absolute) {
  const double diff = std::abs(current - initial);
  if (initial == 0.0) {
    out = diff;
    absolute = true;
  } else {
    out = diff / std::abs(initial);
    absolute = false;
  }
}

RelativeDrift relative_drift(const InvariantRecord& current, const InvariantRecord& initial) {
  RelativeDrift d;
  drift_component(current.mass_h, initial.mass_h, d.ri1, d.absolute1);
  drift_component(current.momentum_h, initial.momentum_h, d.ri2, d.absolute2);
  drift_component(current.energy_h, initial.energy_h, d.ri3, d.absolute3);
  return d;
}

double analytic_two_soliton_momentum(const TwoSolitonSpec& spec, double sigma, double gamma) {
  RlwParams params{1.0, sigma, gamma};
  double total = 0.0;
  const double cs[2] = {spec.c1, spec.c2};
  const double ms[2] = {spec.m1(params), spec.m2(params)};
  for (int i = 0; i < 2; ++i) {
    if (cs[i] == 0.0) continue;  // degenerate pulse contributes nothing
    total += 6.0 * cs[i] * cs[i] / ms[i] + 24.0 * ms[i] * cs[i] * cs[i] * sigma / 5.0;
  }
  return total;
}

}  // namespace rlw
