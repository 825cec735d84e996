#pragma once

#include <optional>

#include "spectral_bounds/geometry.hpp"

namespace spectral_bounds {

/// Minimizer of xi -> integral of 1/h_xi over the boundary.
struct FResult {
  double value = 0.0;
  Point minimizer;
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;
};

struct FOptions {
  int max_iterations = 200;
  /// Stop when |grad| <= gradient_tolerance * value / diameter.
  double gradient_tolerance = 1e-9;
};

/// Damped Newton with backtracking from an admissible start. The objective
/// blows up as any h_xi -> 0, so iterates stay inside the admissible set.
/// Throws NotStarShapedError when `start` is not admissible.
FResult minimize_F(const BoundaryMesh& mesh, const Point& start, const FOptions& options = {});

/// sum w_i N_i / h_xi(x_i)^2.
Point grad_F(const BoundaryMesh& mesh, const Point& xi);

/// sum 2 w_i N_i N_i^T / h_xi(x_i)^3.
Eigen::MatrixXd hessian_F(const BoundaryMesh& mesh, const Point& xi);

/// Known closed forms for catalog shapes; nullopt for generic polytopes.
std::optional<double> F_closed_form(const ShapeSpec& shape);

/// Lower bound d |B_1|^{2/d} |Omega|^{1-2/d}, attained only by balls.
double F_faber_krahn_floor(int dimension, double volume);

}  // namespace spectral_bounds
