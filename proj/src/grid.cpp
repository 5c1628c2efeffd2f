#include "rlw/grid.hpp"

#include <cmath>
#include <numbers>

#include "rlw/errors.hpp"

namespace rlw {

Grid make_grid(double x_left, double x_right, int n_points) {
  if (!(x_right > x_left)) {
    throw ConfigError("grid interval must satisfy x_right > x_left");
  }
  if (n_points < 4 || n_points % 2 != 0) {
    throw ConfigError("grid needs an even number of points, at least 4 (got " +
                      std::to_string(n_points) + ")");
  }
  Grid g;
  g.x_left = x_left;
  g.x_right = x_right;
  g.n_points = n_points;
  g.h = (x_right - x_left) / n_points;
  g.mu = 2.0 * std::numbers::pi / (x_right - x_left);
  g.nodes.resize(n_points);
  for (int j = 0; j < n_points; ++j) {
    g.nodes[j] = x_left + j * g.h;
  }
  return g;
}

static void check_length(const Grid& grid, const GridFunction& u, const char* name) {
  if (u.size() != grid.n_points) {
    throw ShapeError(std::string(name) + " has length " + std::to_string(u.size()) +
                     ", grid has " + std::to_string(grid.n_points) + " points");
  }
}

double inner_product_h(const Grid& grid, const GridFunction& u, const GridFunction& v) {
  check_length(grid, u, "u");
  check_length(grid, v, "v");
  return grid.h * u.dot(v);
}

double norm_h(const Grid& grid, const GridFunction& u) {
  check_length(grid, u, "u");
  return std::sqrt(grid.h) * u.norm();
}

double norm_linf(const GridFunction& u) {
  return u.size() == 0 ? 0.0 : u.cwiseAbs().maxCoeff();
}

GridFunction forward_difference(const Grid& grid, const GridFunction& u) {
  check_length(grid, u, "u");
  const int n = grid.n_points;
  GridFunction out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = (u[(j + 1) % n] - u[j]) / grid.h;
  }
  return out;
}

}  // namespace rlw
