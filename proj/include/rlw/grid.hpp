#pragma once

#include <Eigen/Core>

namespace rlw {

// Nodal values of a grid function on a periodic collocation grid.
using GridFunction = Eigen::VectorXd;

// Uniform periodic collocation grid on [x_left, x_right) with an even number
// of nodes x_j = x_left + j*h. The right endpoint is identified with the left.
struct Grid {
  double x_left = 0.0;
  double x_right = 0.0;
  int n_points = 0;
  double h = 0.0;   // mesh size (x_right - x_left)/N
  double mu = 0.0;  // fundamental wavenumber 2*pi/(x_right - x_left)
  Eigen::VectorXd nodes;

  double length() const { return x_right - x_left; }
};

Grid make_grid(double x_left, double x_right, int n_points);

// Discrete inner product (u,v)_h = h * sum_j u_j v_j.
double inner_product_h(const Grid& grid, const GridFunction& u, const GridFunction& v);

// ||u||_h = sqrt((u,u)_h).
double norm_h(const Grid& grid, const GridFunction& u);

// max_j |u_j|.
double norm_linf(const GridFunction& u);

// Forward difference quotient (u_{j+1} - u_j)/h with periodic wrap.
GridFunction forward_difference(const Grid& grid, const GridFunction& u);

}  // namespace rlw
