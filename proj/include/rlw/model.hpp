#pragma once

#include <variant>

#include "rlw/grid.hpp"
#include "rlw/spectral.hpp"

namespace rlw {

// Coefficients of u_t + a u_x - sigma u_xxt + (gamma u^3/6)'_x = 0.
struct RlwParams {
  double a = 1.0;
  double sigma = 1.0;
  double gamma = 1.0;
};

// Throws ConfigError unless all three coefficients are strictly positive.
void validate(const RlwParams& params);

// Solitary wave 3c sech^2(k [x - x0 - v t]) with v = a + gamma*c.
struct SolitonSpec {
  double c = 1.0 / 3.0;  // amplitude scale; peak value is 3c
  double x0 = 0.0;

  double wavenumber(const RlwParams& params) const;  // k
  double speed(const RlwParams& params) const;       // v
};

// Sum of two solitary pulses 3c_i sech^2(m_i (x - x_i)); uses the a = 1
// convention, m_i = (1/2) sqrt(gamma c_i / ((gamma c_i + 1) sigma)).
struct TwoSolitonSpec {
  double c1 = 1.0;
  double c2 = 0.5;
  double x1 = -20.0;
  double x2 = 15.0;

  double m1(const RlwParams& params) const;
  double m2(const RlwParams& params) const;
};

struct MaxwellianSpec {
  double center = 7.0;  // exp(-(x - center)^2)
};

// Closed-form initial datum u0(x). Parameters are bound at construction.
class InitialCondition {
 public:
  static InitialCondition single_soliton(const RlwParams& params, const SolitonSpec& spec);
  static InitialCondition two_soliton(const RlwParams& params, const TwoSolitonSpec& spec);
  static InitialCondition maxwellian(const RlwParams& params, const MaxwellianSpec& spec);

  double operator()(double x) const;

  const std::variant<SolitonSpec, TwoSolitonSpec, MaxwellianSpec>& spec() const { return spec_; }
  const RlwParams& params() const { return params_; }

 private:
  InitialCondition(const RlwParams& params,
                   std::variant<SolitonSpec, TwoSolitonSpec, MaxwellianSpec> spec);

  RlwParams params_;
  std::variant<SolitonSpec, TwoSolitonSpec, MaxwellianSpec> spec_;
};

// Exact traveling-wave solution value at (x, t).
double exact_soliton(const RlwParams& params, const SolitonSpec& spec, double x, double t);

// Samples u0 at the grid nodes. Emits a warning (stderr) when the profile has
// not decayed below 1e-8 at the domain endpoints; periodic truncation of
// sech^2 tails is accepted, not rejected.
GridFunction initial_profile(const InitialCondition& ic, const Grid& grid);

// D(w)v = a D_1 v + (gamma/3) (w .* D_1 v + D_1(w .* v)); skew-adjoint in (.,.)_h.
GridFunction apply_nonlinear_operator(const RlwParams& params, const SpectralOperators& ops,
                                      const GridFunction& w, const GridFunction& v);

// Overflow-safe sech.
double sech(double z);

}  // namespace rlw
