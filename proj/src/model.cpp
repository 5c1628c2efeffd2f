#include "rlw/model.hpp"

#include <cmath>
#include <iostream>

#include "rlw/errors.hpp"

namespace rlw {

void validate(const RlwParams& params) {
  if (!(params.a > 0.0) || !(params.sigma > 0.0) || !(params.gamma > 0.0)) {
    throw ConfigError("model coefficients a, sigma, gamma must be positive");
  }
}

double sech(double z) {
  const double az = std::min(std::abs(z), 700.0);
  return 2.0 / (std::exp(az) + std::exp(-az));
}

double SolitonSpec::wavenumber(const RlwParams& params) const {
  return 0.5 * std::sqrt(params.gamma * c / (params.sigma * (params.a + params.gamma * c)));
}

double SolitonSpec::speed(const RlwParams& params) const { return params.a + params.gamma * c; }

static double two_soliton_m(double c, const RlwParams& params) {
  return 0.5 * std::sqrt(params.gamma * c / ((params.gamma * c + 1.0) * params.sigma));
}

double TwoSolitonSpec::m1(const RlwParams& params) const { return two_soliton_m(c1, params); }
double TwoSolitonSpec::m2(const RlwParams& params) const { return two_soliton_m(c2, params); }

InitialCondition::InitialCondition(const RlwParams& params,
                                   std::variant<SolitonSpec, TwoSolitonSpec, MaxwellianSpec> spec)
    : params_(params), spec_(std::move(spec)) {
  validate(params_);
}

InitialCondition InitialCondition::single_soliton(const RlwParams& params,
                                                  const SolitonSpec& spec) {
  if (!(spec.c > 0.0)) throw ConfigError("soliton amplitude scale c must be positive");
  return InitialCondition(params, spec);
}

InitialCondition InitialCondition::two_soliton(const RlwParams& params,
                                               const TwoSolitonSpec& spec) {
  if (!(spec.c1 > 0.0) || !(spec.c2 > 0.0)) {
    throw ConfigError("two-soliton amplitude scales c1, c2 must be positive");
  }
  // m_i = (1/2) sqrt(gamma c / ((gamma c + 1) sigma)) assumes a = 1.
  if (params.a != 1.0) {
    throw ConfigError("two-soliton initial data requires the a = 1 convention (got a = " +
                      std::to_string(params.a) + ")");
  }
  return InitialCondition(params, spec);
}

InitialCondition InitialCondition::maxwellian(const RlwParams& params,
                                              const MaxwellianSpec& spec) {
  return InitialCondition(params, spec);
}

double InitialCondition::operator()(double x) const {
  if (const auto* s = std::get_if<SolitonSpec>(&spec_)) {
    return exact_soliton(params_, *s, x, 0.0);
  }
  if (const auto* s = std::get_if<TwoSolitonSpec>(&spec_)) {
    const double s1 = sech(s->m1(params_) * (x - s->x1));
    const double s2 = sech(s->m2(params_) * (x - s->x2));
    return 3.0 * s->c1 * s1 * s1 + 3.0 * s->c2 * s2 * s2;
  }
  const auto& m = std::get<MaxwellianSpec>(spec_);
  const double d = x - m.center;
  return std::exp(-d * d);
}

double exact_soliton(const RlwParams& params, const SolitonSpec& spec, double x, double t) {
  const double s = sech(spec.wavenumber(params) * (x - spec.x0 - spec.speed(params) * t));
  return 3.0 * spec.c * s * s;
}

GridFunction initial_profile(const InitialCondition& ic, const Grid& grid) {
  GridFunction u(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) u[j] = ic(grid.nodes[j]);
  const double left = std::abs(ic(grid.x_left));
  const double right = std::abs(ic(grid.x_right));
  if (left > 1e-8 || right > 1e-8) {
    std::cerr << "warning: initial profile is " << std::max(left, right)
              << " at a domain endpoint; periodic truncation error may dominate\n";
  }
  return u;
}

GridFunction apply_nonlinear_operator(const RlwParams& params, const SpectralOperators& ops,
                                      const GridFunction& w, const GridFunction& v) {
  if (w.size() != v.size()) {
    throw ShapeError("w and v lengths differ in nonlinear operator");
  }
  const GridFunction dv = ops.derivative(v, 1);
  const GridFunction dwv = ops.derivative(w.cwiseProduct(v), 1);
  return params.a * dv + (params.gamma / 3.0) * (w.cwiseProduct(dv) + dwv);
}

}  // namespace rlw
