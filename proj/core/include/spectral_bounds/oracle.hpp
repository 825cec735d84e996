#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "spectral_bounds/geometry.hpp"

namespace spectral_bounds {

/// Finite-difference Dirichlet Laplacian on the lattice h Z^d restricted to a shape.
///
/// Nodes next to a curved boundary use the Shortley-Weller stencil, which
/// makes the matrix nonsymmetric; boundary-conforming grids give the plain
/// symmetric 5-point / 7-point operator.
struct GridOperator {
  Eigen::SparseMatrix<double> matrix;
  std::vector<Point> nodes;
  double spacing = 0.0;
  int dimension = 0;
  bool symmetric = true;
};

GridOperator assemble_dirichlet_laplacian(const ShapeSpec& shape, double spacing);

struct EigenSolveResult {
  std::vector<double> values;
  /// Approximate eigenvector of the smallest eigenvalue.
  Eigen::VectorXd ground_state;
  int iterations = 0;
};

/// Shift-invert (about 0) block iteration for the `count` smallest eigenvalues.
/// Throws SolverError when the iteration cap is reached.
EigenSolveResult solve_lowest_eigenpairs(const GridOperator& op, int count);

/// The `count` smallest eigenvalues of the discrete Dirichlet Laplacian with spacing h.
std::vector<double> fd_eigs(const ShapeSpec& shape, double spacing, int count);

/// (2^order fine - coarse) / (2^order - 1), for values at spacings h and h/2.
double richardson(double coarse, double fine, int order);

/// Torsional rigidity: integral of u where -Laplace u = 1 and u = 0 on the boundary.
double fd_torsion(const ShapeSpec& shape, double spacing);

/// Grid spacing resolving the narrowest width of the shape with `nodes` intervals.
/// For boxes and the Swiss cross the spacing divides every half-width when possible.
double default_spacing(const ShapeSpec& shape, int nodes);

struct SpectralEstimate {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::optional<double> torsion;
  /// Spacing of the finest grid used.
  double spacing = 0.0;
  bool extrapolated = false;
  /// Relative two-grid difference |extrapolated - fine| / extrapolated.
  double error_estimate = 0.0;
};

struct OracleOptions {
  /// Intervals across the narrowest width on the coarse grid.
  int nodes = 128;
  bool extrapolate = true;
  bool torsion = false;
};

SpectralEstimate estimate_spectrum(const ShapeSpec& shape, const OracleOptions& options = {});

}  // namespace spectral_bounds
