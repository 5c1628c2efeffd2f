#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "rlw/errors.hpp"
#include "rlw/grid.hpp"
#include "rlw/spectral.hpp"
#include "test_support.hpp"

using namespace rlw;
using namespace rlw::testing;

TEST_CASE("make_grid fields") {
  const Grid g = make_grid(-30.0, 30.0, 256);
  CHECK(g.h == 60.0 / 256);  // 0.234375, dyadic
  CHECK(g.mu == doctest::Approx(2.0 * std::numbers::pi / 60.0).epsilon(1e-15));
  CHECK(g.mu * g.length() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(g.nodes.size() == 256);
  for (int j = 0; j + 1 < g.n_points; ++j) {
    CHECK(g.nodes[j + 1] - g.nodes[j] == doctest::Approx(g.h).epsilon(1e-13));
  }

  const Grid paper = make_grid(-60.0, 200.0, 2600);
  CHECK(paper.h == 0.1);
}

TEST_CASE("make_grid rejects bad input") {
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 7), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 2), ConfigError);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 8), ConfigError);
  CHECK_THROWS_AS(make_grid(1.0, -1.0, 8), ConfigError);
}

TEST_CASE("derivative of constants vanishes") {
  const Grid g = make_grid(-5.0, 5.0, 16);
  const SpectralOperators ops(g);
  const GridFunction c = GridFunction::Constant(16, 3.7);
  for (int k : {1, 2, 3, 4}) {
    CHECK(norm_linf(ops.derivative(c, k)) <= 1e-13);
  }
}

TEST_CASE("derivative of a resolved single mode is exact") {
  const Grid g = make_grid(-30.0, 30.0, 32);
  const SpectralOperators ops(g);
  GridFunction u(32), expected(32);
  for (int j = 0; j < 32; ++j) {
    u[j] = std::sin(g.mu * g.nodes[j]);
    expected[j] = g.mu * std::cos(g.mu * g.nodes[j]);
  }
  CHECK(norm_linf(ops.derivative(u, 1) - expected) <= 1e-12);
}

TEST_CASE("spectral derivative matches the cardinal-function oracle") {
  std::mt19937 rng(2024);
  for (int n : {8, 16, 32}) {
    const Grid g = make_grid(-4.0, 9.0, n);
    const SpectralOperators ops(g);
    const Eigen::MatrixXd oracle1 = cardinal_diff_matrix(g, 1);
    const Eigen::MatrixXd oracle2 = cardinal_diff_matrix(g, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction u = random_vector(rng, n);
      CHECK((ops.derivative(u, 1) - oracle1 * u).norm() <= 1e-11 * u.norm());
      CHECK((ops.derivative(u, 2) - oracle2 * u).norm() <= 1e-11 * oracle2.norm() * u.norm());
    }
  }
}

TEST_CASE("dense matrix equals the FFT route") {
  std::mt19937 rng(7);
  for (int n : {8, 16, 32}) {
    const Grid g = make_grid(0.0, 2.0, n);
    const SpectralOperators ops(g);
    for (int k : {1, 2}) {
      const Eigen::MatrixXd m = dense_diff_matrix(ops, k);
      for (int trial = 0; trial < 100; ++trial) {
        const GridFunction u = random_vector(rng, n);
        const GridFunction via_fft = ops.derivative(u, k);
        CHECK((via_fft - m * u).norm() <= 1e-11 * (1.0 + via_fft.norm()));
      }
    }
  }
}

TEST_CASE("dense matrix structure") {
  const Grid g = make_grid(-1.0, 3.0, 8);
  const SpectralOperators ops(g);

  const Eigen::MatrixXd d1 = dense_diff_matrix(ops, 1);
  CHECK((d1 + d1.transpose()).cwiseAbs().maxCoeff() <= 1e-12);

  const Eigen::MatrixXd d2 = dense_diff_matrix(ops, 2);
  CHECK((d2 - d2.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(d2.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
  // negative semi-definite
  const Eigen::VectorXd eigs = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d2).eigenvalues();
  CHECK(eigs.maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(dense_diff_matrix(ops, 3), ConfigError);
}

TEST_CASE("dense matrix differentiates a single mode") {
  const Grid g = make_grid(-30.0, 30.0, 16);
  const SpectralOperators ops(g);
  const Eigen::MatrixXd d1 = dense_diff_matrix(ops, 1);
  GridFunction u(16), expected(16);
  for (int j = 0; j < 16; ++j) {
    u[j] = std::sin(g.mu * g.nodes[j]);
    expected[j] = g.mu * std::cos(g.mu * g.nodes[j]);
  }
  CHECK(norm_linf(d1 * u - expected) <= 1e-11);
}

TEST_CASE("inner product") {
  const Grid g = make_grid(0.0, 1.0, 8);
  const GridFunction ones = GridFunction::Ones(8);
  CHECK(inner_product_h(g, ones, ones) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(inner_product_h(g, GridFunction::Zero(8), ones) == 0.0);

  std::mt19937 rng(11);
  const Grid g16 = make_grid(-2.0, 5.0, 16);
  const GridFunction u = random_vector(rng, 16);
  const GridFunction v = random_vector(rng, 16);
  double naive = 0.0;
  for (int j = 0; j < 16; ++j) naive += u[j] * v[j];
  naive *= g16.h;
  CHECK(inner_product_h(g16, u, v) == doctest::Approx(naive).epsilon(1e-14));
  CHECK(inner_product_h(g16, u, v) == doctest::Approx(inner_product_h(g16, v, u)).epsilon(1e-15));

  CHECK_THROWS_AS(inner_product_h(g16, u, GridFunction::Zero(8)), ShapeError);
}

TEST_CASE("norms of a constant") {
  const Grid g = make_grid(0.0, 4.0, 16);
  const SpectralOperators ops(g);
  const Norms n = norms(ops, GridFunction::Constant(16, 2.5));
  CHECK(n.seminorm_h == 0.0);
  CHECK(n.fwd_diff_h == 0.0);
  CHECK(n.linf_h == 2.5);
  CHECK(n.l2_h == doctest::Approx(2.5 * 2.0).epsilon(1e-15));  // 2.5 sqrt(L)
}

TEST_CASE("seminorm equivalence inequalities") {
  std::mt19937 rng(23);
  const Grid g = make_grid(-3.0, 3.0, 32);
  const SpectralOperators ops(g);
  const double half_pi = std::numbers::pi / 2.0;
  for (int trial = 0; trial < 100; ++trial) {
    const GridFunction u = random_vector(rng, 32);
    const Norms n = norms(ops, u);
    CHECK(n.fwd_diff_h <= n.seminorm_h + 1e-12);
    CHECK(n.seminorm_h <= half_pi * n.fwd_diff_h + 1e-12);
    CHECK(norm_h(g, ops.derivative(u, 1)) <= n.seminorm_h + 1e-12);
  }
}

TEST_CASE("inner-product symmetry of the derivative operators") {
  std::mt19937 rng(31);
  const Grid g = make_grid(-1.0, 1.0, 32);
  const SpectralOperators ops(g);
  for (int trial = 0; trial < 100; ++trial) {
    const GridFunction u = random_vector(rng, 32);
    const GridFunction v = random_vector(rng, 32);
    const double scale = norm_h(g, u) * norm_h(g, v);
    CHECK(std::abs(inner_product_h(g, ops.derivative(u, 1), v) +
                   inner_product_h(g, u, ops.derivative(v, 1))) <= 1e-12 * (1.0 + scale));
    CHECK(std::abs(inner_product_h(g, ops.derivative(u, 2), v) -
                   inner_product_h(g, u, ops.derivative(v, 2))) <= 1e-12 * (1.0 + scale));
    CHECK(inner_product_h(g, ops.derivative(u, 2), u) <= 1e-12);
  }
}

TEST_CASE("trigonometric polynomials below the Nyquist mode are exact") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const Grid g = make_grid(-7.0, 7.0, 32);
  const SpectralOperators ops(g);
  GridFunction u = GridFunction::Zero(32), d1 = GridFunction::Zero(32),
               d2 = GridFunction::Zero(32);
  for (int m = 0; m < 16; ++m) {
    const double ac = dist(rng), as = dist(rng), w = m * g.mu;
    for (int j = 0; j < 32; ++j) {
      const double phase = w * g.nodes[j];
      u[j] += ac * std::cos(phase) + as * std::sin(phase);
      d1[j] += w * (-ac * std::sin(phase) + as * std::cos(phase));
      d2[j] += w * w * (-ac * std::cos(phase) - as * std::sin(phase));
    }
  }
  CHECK(norm_linf(ops.derivative(u, 1) - d1) <= 1e-11);
  CHECK(norm_linf(ops.derivative(u, 2) - d2) <= 1e-11);
}

TEST_CASE("discrete Sobolev inequality") {
  std::mt19937 rng(53);
  const Grid g = make_grid(-2.0, 6.0, 64);
  const SpectralOperators ops(g);
  for (int trial = 0; trial < 100; ++trial) {
    const GridFunction u = random_vector(rng, 64);
    const Norms n = norms(ops, u);
    CHECK(n.linf_h * n.linf_h <=
          2.0 * n.l2_h * n.fwd_diff_h + n.l2_h * n.l2_h / g.length() + 1e-12);
  }
}

TEST_CASE("forward difference wraps periodically") {
  const Grid g = make_grid(0.0, 1.0, 4);
  GridFunction u(4);
  u << 1.0, 2.0, 4.0, 8.0;
  const GridFunction d = forward_difference(g, u);
  CHECK(d[3] == doctest::Approx((1.0 - 8.0) / g.h));
}

TEST_CASE("shared operators are safe across threads") {
  const Grid g = make_grid(-1.0, 1.0, 64);
  const SpectralOperators ops(g);
  std::mt19937 rng(61);
  const GridFunction u = random_vector(rng, 64);
  const GridFunction reference = ops.derivative(u, 2);

  std::vector<std::thread> workers;
  std::vector<double> worst(4, 0.0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) {
        worst[t] = std::max(worst[t], norm_linf(ops.derivative(u, 2) - reference));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (double w : worst) CHECK(w == 0.0);
}
