#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "rlw/grid.hpp"

namespace rlw {

// FFT-backed spectral differentiation on a periodic grid.
//
// D_k acts diagonally in Fourier space with eigenvalue (i*mu*m)^k per mode m,
// modes ordered 0,1,...,N/2-1,N/2,-N/2+1,...,-1. The Nyquist eigenvalue is
// zeroed for odd k and kept for even k, so D_k of a real grid function is
// real again.
//
// Immutable after construction; concurrent derivative calls on a shared
// instance are safe (per-call buffers, new-array plan execution).
class SpectralOperators {
 public:
  explicit SpectralOperators(Grid grid);
  ~SpectralOperators();

  SpectralOperators(const SpectralOperators&) = delete;
  SpectralOperators& operator=(const SpectralOperators&) = delete;
  SpectralOperators(SpectralOperators&& other) noexcept;
  SpectralOperators& operator=(SpectralOperators&& other) noexcept;

  const Grid& grid() const { return grid_; }

  // Nodal values of d^k/dx^k of the trigonometric interpolant of u.
  GridFunction derivative(const GridFunction& u, int order) const;

  // (I - sigma*D_2)^{-1} u, diagonal in Fourier space.
  GridFunction helmholtz_inverse(const GridFunction& u, double sigma) const;

  const std::vector<std::complex<double>>& spectrum_odd() const { return spectrum_odd_; }
  const std::vector<std::complex<double>>& spectrum_even() const { return spectrum_even_; }

 private:
  GridFunction transform_diagonal(const GridFunction& u,
                                  const std::vector<std::complex<double>>& scale) const;

  Grid grid_;
  std::vector<std::complex<double>> spectrum_odd_;   // i*mu*m, Nyquist zeroed
  std::vector<std::complex<double>> spectrum_even_;  // i*mu*m, Nyquist kept
  void* plan_forward_ = nullptr;
  void* plan_backward_ = nullptr;
};

GridFunction spectral_derivative(const SpectralOperators& ops, const GridFunction& u, int order);

// Dense N x N differentiation matrix, k in {1,2}: columns are D_k applied to
// the unit basis vectors. Oracle form and backend of the direct solver.
Eigen::MatrixXd dense_diff_matrix(const SpectralOperators& ops, int order);

struct Norms {
  double l2_h = 0.0;        // sqrt((u,u)_h)
  double seminorm_h = 0.0;  // sqrt((-D_2 u, u)_h)
  double fwd_diff_h = 0.0;  // sqrt((dx+ u, dx+ u)_h)
  double linf_h = 0.0;      // max_j |u_j|
};

Norms norms(const SpectralOperators& ops, const GridFunction& u);

}  // namespace rlw
