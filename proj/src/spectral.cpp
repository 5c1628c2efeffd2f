#include "rlw/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <utility>

#include <fftw3.h>

#include "rlw/errors.hpp"

namespace rlw {

namespace {

// FFTW's planner is not thread-safe; plan creation/destruction is serialized.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

SpectralOperators::SpectralOperators(Grid grid) : grid_(std::move(grid)) {
  const int n = grid_.n_points;
  spectrum_odd_.resize(n);
  spectrum_even_.resize(n);
  for (int j = 0; j < n; ++j) {
    const int m = (j <= n / 2) ? j : j - n;
    spectrum_even_[j] = std::complex<double>(0.0, grid_.mu * m);
    spectrum_odd_[j] = (j == n / 2) ? std::complex<double>(0.0, 0.0) : spectrum_even_[j];
  }

  std::vector<std::complex<double>> buf(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_UNALIGNED keeps the plans valid for any later buffer.
  plan_forward_ = fftw_plan_dft_1d(n, as_fftw(buf.data()), as_fftw(buf.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_backward_ = fftw_plan_dft_1d(n, as_fftw(buf.data()), as_fftw(buf.data()),
                                    FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

SpectralOperators::~SpectralOperators() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_forward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  if (plan_backward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
}

SpectralOperators::SpectralOperators(SpectralOperators&& other) noexcept
    : grid_(std::move(other.grid_)),
      spectrum_odd_(std::move(other.spectrum_odd_)),
      spectrum_even_(std::move(other.spectrum_even_)),
      plan_forward_(std::exchange(other.plan_forward_, nullptr)),
      plan_backward_(std::exchange(other.plan_backward_, nullptr)) {}

SpectralOperators& SpectralOperators::operator=(SpectralOperators&& other) noexcept {
  if (this != &other) {
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      if (plan_forward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
      if (plan_backward_) fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
    }
    grid_ = std::move(other.grid_);
    spectrum_odd_ = std::move(other.spectrum_odd_);
    spectrum_even_ = std::move(other.spectrum_even_);
    plan_forward_ = std::exchange(other.plan_forward_, nullptr);
    plan_backward_ = std::exchange(other.plan_backward_, nullptr);
  }
  return *this;
}

GridFunction SpectralOperators::transform_diagonal(
    const GridFunction& u, const std::vector<std::complex<double>>& scale) const {
  const int n = grid_.n_points;
  if (u.size() != n) {
    throw ShapeError("grid function has length " + std::to_string(u.size()) +
                     ", operators expect " + std::to_string(n));
  }
  std::vector<std::complex<double>> buf(n);
  for (int j = 0; j < n; ++j) buf[j] = u[j];

  fftw_execute_dft(static_cast<fftw_plan>(plan_forward_), as_fftw(buf.data()),
                   as_fftw(buf.data()));
  const double ninv = 1.0 / n;
  for (int j = 0; j < n; ++j) buf[j] *= scale[j] * ninv;
  fftw_execute_dft(static_cast<fftw_plan>(plan_backward_), as_fftw(buf.data()),
                   as_fftw(buf.data()));

  GridFunction out(n);
  double residue = 0.0;
  for (int j = 0; j < n; ++j) {
    out[j] = buf[j].real();
    residue = std::max(residue, std::abs(buf[j].imag()));
  }
  if (residue > 1e-10 * (1.0 + norm_h(grid_, u))) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", residue);
    throw NumericsError("imaginary residue " + std::string(buf) +
                        " after inverse transform of a real grid function");
  }
  return out;
}

GridFunction SpectralOperators::derivative(const GridFunction& u, int order) const {
  if (order < 1) {
    throw ConfigError("derivative order must be >= 1 (got " + std::to_string(order) + ")");
  }
  const auto& base = (order % 2 == 1) ? spectrum_odd_ : spectrum_even_;
  std::vector<std::complex<double>> scale(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    std::complex<double> s = base[j];
    for (int p = 1; p < order; ++p) s *= base[j];
    scale[j] = s;
  }
  return transform_diagonal(u, scale);
}

GridFunction SpectralOperators::helmholtz_inverse(const GridFunction& u, double sigma) const {
  // Eigenvalues of I - sigma*D_2 are 1 + sigma*(mu*m)^2 >= 1.
  std::vector<std::complex<double>> scale(spectrum_even_.size());
  for (std::size_t j = 0; j < spectrum_even_.size(); ++j) {
    const double lam2 = (spectrum_even_[j] * spectrum_even_[j]).real();
    scale[j] = 1.0 / (1.0 - sigma * lam2);
  }
  return transform_diagonal(u, scale);
}

GridFunction spectral_derivative(const SpectralOperators& ops, const GridFunction& u, int order) {
  return ops.derivative(u, order);
}

Eigen::MatrixXd dense_diff_matrix(const SpectralOperators& ops, int order) {
  if (order != 1 && order != 2) {
    throw ConfigError("dense differentiation matrix supports orders 1 and 2 only");
  }
  const int n = ops.grid().n_points;
  Eigen::MatrixXd m(n, n);
  GridFunction e = GridFunction::Zero(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    m.col(j) = ops.derivative(e, order);
    e[j] = 0.0;
  }
  return m;
}

Norms norms(const SpectralOperators& ops, const GridFunction& u) {
  const Grid& grid = ops.grid();
  Norms out;
  out.l2_h = norm_h(grid, u);
  out.linf_h = norm_linf(u);
  out.fwd_diff_h = norm_h(grid, forward_difference(grid, u));

  const double radicand = -inner_product_h(grid, ops.derivative(u, 2), u);
  const double slack = 1e-10 * (1.0 + inner_product_h(grid, u, u));
  if (radicand < -slack) {
    throw NumericsError("seminorm radicand " + std::to_string(radicand) +
                        " is negative beyond round-off");
  }
  out.seminorm_h = std::sqrt(std::max(radicand, 0.0));
  return out;
}

}  // namespace rlw
