#include "spectral_bounds/fmin.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>

#include "spectral_bounds/error.hpp"

namespace spectral_bounds {

namespace {

constexpr double kArmijo = 1e-4;

double objective_or_inf(const BoundaryMesh& mesh, const Point& xi) {
  if (!is_star_center(mesh, xi)) return std::numeric_limits<double>::infinity();
  return support_inv_integral(mesh, xi);
}

}  // namespace

Point grad_F(const BoundaryMesh& mesh, const Point& xi) {
  if (!is_star_center(mesh, xi)) throw NotStarShapedError("not strictly star-shaped from xi");
  Point g = Point::Zero(mesh.dimension);
  for (const auto& node : mesh.nodes) {
    const double h = (node.position - xi).dot(node.normal);
    g += (node.weight / (h * h)) * node.normal;
  }
  return g;
}

Eigen::MatrixXd hessian_F(const BoundaryMesh& mesh, const Point& xi) {
  if (!is_star_center(mesh, xi)) throw NotStarShapedError("not strictly star-shaped from xi");
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(mesh.dimension, mesh.dimension);
  for (const auto& node : mesh.nodes) {
    const double h = (node.position - xi).dot(node.normal);
    H.noalias() += (2.0 * node.weight / (h * h * h)) * node.normal * node.normal.transpose();
  }
  return H;
}

FResult minimize_F(const BoundaryMesh& mesh, const Point& start, const FOptions& options) {
  FResult result;
  result.minimizer = start;
  result.value = support_inv_integral(mesh, start);
  const double scale = mesh.diameter > 0.0 ? mesh.diameter : 1.0;

  for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
    const Point g = grad_F(mesh, result.minimizer);
    result.gradient_norm = g.norm();
    if (result.gradient_norm <= options.gradient_tolerance * result.value / scale) {
      result.converged = true;
      return result;
    }

    Point direction;
    const Eigen::MatrixXd H = hessian_F(mesh, result.minimizer);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
    const auto diag = ldlt.vectorD();
    const bool well_conditioned = ldlt.info() == Eigen::Success && diag.minCoeff() > 0.0 &&
                                  diag.minCoeff() > 1e-12 * diag.maxCoeff();
    if (well_conditioned) {
      direction = -ldlt.solve(g);
    } else {
      // Steepest descent scaled so the first trial step moves a fraction of the diameter.
      direction = -(0.1 * scale / result.gradient_norm) * g;
    }
    double slope = g.dot(direction);
    if (slope >= 0.0) {
      direction = -g;
      slope = -g.squaredNorm();
    }

    // Near the minimum the predicted decrease drops below the rounding noise of the sum.
    const double noise = 1e-13 * std::abs(result.value);
    double step = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      const Point trial = result.minimizer + step * direction;
      const double value = objective_or_inf(mesh, trial);
      if (value <= result.value + kArmijo * step * slope + noise) {
        result.minimizer = trial;
        result.value = value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No decrease representable in floating point: we are at the minimum to
      // machine precision, or the barrier was hit.
      result.gradient_norm = grad_F(mesh, result.minimizer).norm();
      result.converged = result.gradient_norm <= 1e-6 * result.value / scale;
      if (!result.converged) throw SolverError("objective barrier hit");
      return result;
    }
  }
  result.gradient_norm = grad_F(mesh, result.minimizer).norm();
  result.converged = result.gradient_norm <= options.gradient_tolerance * result.value / scale;
  return result;
}

std::optional<double> F_closed_form(const ShapeSpec& shape) {
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid: {
      double inverse_squares = 0.0;
      for (double a : shape.half_axes()) inverse_squares += 1.0 / (a * a);
      return measures(shape).volume * inverse_squares;
    }
    case ShapeKind::ball: {
      const DomainMeasures m = measures(shape);
      return m.surface / shape.radius();
    }
    case ShapeKind::stadium: {
      const double c = shape.b() / shape.a();
      if (c < 1.0) {
        return 4.0 * c + 8.0 / std::sqrt(1.0 - c * c) * std::atan(std::sqrt((1.0 - c) / (1.0 + c)));
      }
      if (c == 1.0) return 8.0;
      return 4.0 * c + 4.0 / std::sqrt(c * c - 1.0) * std::log(c + std::sqrt(c * c - 1.0));
    }
    case ShapeKind::swiss_cross: {
      const double c = shape.b() / shape.a();
      return 8.0 * (1.0 + c + c * c) / (1.0 + c);
    }
    case ShapeKind::polytope: return std::nullopt;
  }
  return std::nullopt;
}

double F_faber_krahn_floor(int dimension, double volume) {
  const double d = dimension;
  const double unit_volume = std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
  return d * std::pow(unit_volume, 2.0 / d) * std::pow(volume, 1.0 - 2.0 / d);
}

}  // namespace spectral_bounds
