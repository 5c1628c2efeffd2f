#include <doctest.h>

#include <cmath>
#include <random>

#include "rlw/invariants.hpp"
#include "test_support.hpp"

using namespace rlw;
using namespace rlw::testing;

TEST_CASE("invariants of zero and constant states") {
  const RlwParams p{1.3, 1.0, 0.9};
  const Grid g = make_grid(0.0, 1.0, 8);
  const SpectralOperators ops(g);

  const InvariantRecord zero = compute_invariants(p, ops, GridFunction::Zero(8), 0.0);
  CHECK(zero.mass_h == 0.0);
  CHECK(zero.momentum_h == 0.0);
  CHECK(zero.energy_h == 0.0);

  const double kappa = 0.7;
  const InvariantRecord c = compute_invariants(p, ops, GridFunction::Constant(8, kappa), 0.0);
  CHECK(c.mass_h == doctest::Approx(kappa).epsilon(1e-14));
  CHECK(c.momentum_h == doctest::Approx(kappa * kappa).epsilon(1e-12));
  CHECK(c.energy_h ==
        doctest::Approx(p.gamma * kappa * kappa * kappa / 6.0 + p.a * kappa * kappa / 2.0)
            .epsilon(1e-14));
}

TEST_CASE("norm form agrees with the nodal sum and stays nonnegative") {
  std::mt19937 rng(77);
  const RlwParams p{1.0, 0.6, 1.0};
  const Grid g = make_grid(-4.0, 4.0, 32);
  const SpectralOperators ops(g);
  for (int trial = 0; trial < 50; ++trial) {
    const GridFunction u = random_vector(rng, 32);
    const double norm_form = compute_invariants(p, ops, u, 0.0).momentum_h;
    const double nodal = momentum_nodal_sum(p, ops, u);
    CHECK(norm_form >= 0.0);
    CHECK(std::abs(norm_form - nodal) <= 1e-12 * std::abs(nodal));
  }
}

TEST_CASE("relative drift") {
  InvariantRecord initial{0.0, 2.0, 4.0, -8.0};
  const RelativeDrift zero = relative_drift(initial, initial);
  CHECK(zero.ri1 == 0.0);
  CHECK(zero.ri2 == 0.0);
  CHECK(zero.ri3 == 0.0);
  CHECK_FALSE(zero.absolute1);

  InvariantRecord current{1.0, 2.2, 4.0, -8.4};
  const RelativeDrift d = relative_drift(current, initial);
  CHECK(d.ri1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(d.ri3 == doctest::Approx(0.05).epsilon(1e-12));

  // zero initial mass downgrades to an absolute difference
  InvariantRecord odd_initial{0.0, 0.0, 3.0, 1.0};
  InvariantRecord odd_current{1.0, 5e-4, 3.0, 1.0};
  const RelativeDrift a = relative_drift(odd_current, odd_initial);
  CHECK(a.absolute1);
  CHECK(a.ri1 == doctest::Approx(5e-4).epsilon(1e-12));
  CHECK_FALSE(a.absolute2);
}

TEST_CASE("closed-form two-soliton momentum") {
  const TwoSolitonSpec spec{1.0, 0.5, -20.0, 15.0};
  CHECK(analytic_two_soliton_momentum(spec, 1.0) == doctest::Approx(24.210182).epsilon(1e-7));

  // degenerate second pulse: single-term formula, evaluated directly
  const double m1 = 0.5 * std::sqrt(1.0 / 2.0);
  const double single_term = 6.0 / m1 + 24.0 * m1 / 5.0;
  CHECK(single_term == doctest::Approx(18.667619023324857).epsilon(1e-14));
  CHECK(analytic_two_soliton_momentum(TwoSolitonSpec{1.0, 0.0, 0.0, 0.0}, 1.0) ==
        doctest::Approx(single_term).epsilon(1e-14));

  // doubling the amplitudes scales neither term linearly; pin by direct evaluation
  const TwoSolitonSpec doubled{2.0, 1.0, -20.0, 15.0};
  const RlwParams unit{1.0, 1.0, 1.0};
  double expected = 0.0;
  for (double c : {2.0, 1.0}) {
    const double m = 0.5 * std::sqrt(c / (c + 1.0));
    expected += 6.0 * c * c / m + 24.0 * m * c * c / 5.0;
  }
  CHECK(analytic_two_soliton_momentum(doubled, 1.0) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(doubled.m1(unit) == doctest::Approx(0.5 * std::sqrt(2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("discrete momentum converges to the continuum integral") {
  const RlwParams p{1.0, 1.0, 1.0};
  const SolitonSpec spec{1.0 / 3.0, 0.0};
  const double k = spec.wavenumber(p);
  CHECK(k == doctest::Approx(0.25).epsilon(1e-14));

  // continuum value of int (u^2 + sigma u_x^2) for u = 3c sech^2(kx)
  const double c = spec.c;
  const double exact = 12.0 * c * c / k + 48.0 * k * c * c * p.sigma / 5.0;
  CHECK(exact == doctest::Approx(5.6).epsilon(1e-14));

  // independent quadrature oracle with the analytic derivative
  const double quad = trapezoid(
      [&](double x) {
        const double s = sech(k * x), t = std::tanh(k * x);
        const double u = 3.0 * c * s * s;
        const double ux = -6.0 * c * k * s * s * t;
        return u * u + p.sigma * ux * ux;
      },
      -30.0, 30.0, 200000);
  CHECK(quad == doctest::Approx(exact).epsilon(1e-12));

  double previous_gap = 1.0;
  for (int n : {32, 64, 128}) {
    const Grid g = make_grid(-30.0, 30.0, n);
    const SpectralOperators ops(g);
    GridFunction u(n);
    for (int j = 0; j < n; ++j) u[j] = exact_soliton(p, spec, g.nodes[j], 0.0);
    const double gap = std::abs(compute_invariants(p, ops, u, 0.0).momentum_h - quad) / quad;
    // monotone until the gap reaches round-off noise
    CHECK(gap <= std::max(previous_gap, 1e-10));
    previous_gap = gap;
  }
  CHECK(previous_gap <= 1e-8);
}
